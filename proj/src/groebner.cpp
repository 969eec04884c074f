#include "fano/groebner.hpp"

#include <algorithm>
#include <cassert>

namespace fano::poly {

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
};

void check_deadline(const GroebnerOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) throw ChartTimeout();
}

bool pair_less(const Pair& a, const Pair& b, int nvars) {
    // normal selection: smallest lcm first
    if (a.lcm != b.lcm) return degrevlex_greater(b.lcm, a.lcm, nvars);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

ModPoly spoly(const PrimeField& F, const ModPoly& f, const ModPoly& g) {
    Monomial l = mono_lcm(f.leading().m, g.leading().m);
    ModPoly a = mod_scale_mono(F, f, mono_div(l, f.leading().m), F.inv(f.leading().c));
    ModPoly b = mod_scale_mono(F, g, mono_div(l, g.leading().m), F.inv(g.leading().c));
    ModPoly nb = b;
    for (auto& t : nb.terms) t.c = F.neg(t.c);
    return mod_add(F, a, nb);
}

// Gebauer-Moller update of the pair set when g_new = basis[t] arrives
void update_pairs(std::vector<Pair>& pairs, const std::vector<ModPoly>& basis, size_t t,
                  int nvars) {
    const Monomial lt_new = basis[t].leading().m;
    // drop old pairs whose lcm is strictly divisible by lt_new
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                               [&](const Pair& p) {
                                   if (!divides(lt_new, p.lcm)) return false;
                                   return mono_lcm(basis[p.i].leading().m, lt_new) != p.lcm &&
                                          mono_lcm(basis[p.j].leading().m, lt_new) != p.lcm;
                               }),
                pairs.end());
    // new pairs (i, t)
    std::vector<Pair> fresh;
    for (size_t i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        fresh.push_back({i, t, mono_lcm(basis[i].leading().m, lt_new)});
    }
    // first Buchberger criterion: coprime leads
    auto coprime = [&](const Pair& p) {
        const Monomial& a = basis[p.i].leading().m;
        const Monomial& b = basis[p.j].leading().m;
        return mono_mul(a, b) == p.lcm;
    };
    // Gebauer-Moller M/F criteria among the fresh pairs
    std::vector<bool> drop(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a)
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[a] || drop[b]) continue;
            if (fresh[a].lcm != fresh[b].lcm && divides(fresh[b].lcm, fresh[a].lcm))
                drop[a] = true;
        }
    // among equal lcms keep only one (prefer a coprime pair, which then dies
    // to the first criterion)
    for (size_t a = 0; a < fresh.size(); ++a)
        for (size_t b = a + 1; b < fresh.size(); ++b) {
            if (drop[a] || drop[b]) continue;
            if (fresh[a].lcm == fresh[b].lcm) drop[coprime(fresh[a]) ? b : a] = true;
        }
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a] || coprime(fresh[a])) continue;
        pairs.push_back(fresh[a]);
    }
    std::sort(pairs.begin(), pairs.end(),
              [&](const Pair& x, const Pair& y) { return pair_less(x, y, nvars); });
}

}  // namespace

ModPoly normal_form(const PrimeField& F, const ModPoly& f, const std::vector<ModPoly>& basis,
                    GroebnerStats* stats) {
    ModPoly rem;
    rem.nvars = f.nvars;
    ModPoly h = f;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (divides(g.leading().m, h.leading().m)) {
                uint64_t c = F.mul(h.leading().c, F.inv(g.leading().c));
                ModPoly sub = mod_scale_mono(F, g, mono_div(h.leading().m, g.leading().m),
                                             F.neg(c));
                h = mod_add(F, h, sub);
                if (stats) ++stats->reduction_steps;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(h.leading());
            h.terms.erase(h.terms.begin());
        }
    }
    return rem;
}

std::vector<ModPoly> groebner_basis(const PrimeField& F, std::vector<ModPoly> gens,
                                    const GroebnerOptions& opt, GroebnerStats* stats) {
    int nvars = 0;
    std::vector<ModPoly> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        nvars = g.nvars;
        basis.push_back(mod_monic(F, g));
    }
    if (basis.empty()) return {};
    // input order kept; output is deterministic for a fixed generator list

    std::vector<Pair> pairs;
    std::vector<ModPoly> work;
    for (const auto& g : basis) {
        work.push_back(g);
        update_pairs(pairs, work, work.size() - 1, nvars);
        if (opt.stop_at_unit && g.is_unit()) return {g};
    }
    basis = work;

    while (!pairs.empty()) {
        check_deadline(opt);
        Pair p = pairs.front();
        pairs.erase(pairs.begin());
        if (stats) ++stats->pairs_processed;
        ModPoly s = spoly(F, basis[p.i], basis[p.j]);
        ModPoly r = normal_form(F, s, basis, stats);
        if (r.is_zero()) continue;
        r = mod_monic(F, r);
        if (opt.stop_at_unit && r.is_unit()) return {r};
        basis.push_back(r);
        update_pairs(pairs, basis, basis.size() - 1, nvars);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<ModPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            if (divides(basis[j].leading().m, basis[i].leading().m)) {
                if (basis[j].leading().m == basis[i].leading().m) keep = j > i;
                else keep = false;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others; arrival order kept (deterministic)
    std::vector<ModPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(mod_monic(F, normal_form(F, minimal[i], others, stats)));
    }
    return reduced;
}

bool contains_one(const PrimeField& F, const std::vector<ModPoly>& gens,
                  const GroebnerOptions& opt, GroebnerStats* stats) {
    for (const auto& g : gens)
        if (g.is_unit()) return true;
    GroebnerOptions o = opt;
    o.stop_at_unit = true;
    auto gb = groebner_basis(F, gens, o, stats);
    return gb.size() == 1 && gb[0].is_unit();
}

}  // namespace fano::poly
