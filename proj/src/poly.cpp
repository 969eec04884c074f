#include "fano/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace fano::poly {

bool degrevlex_greater(const Monomial& a, const Monomial& b, int nvars) {
    if (a.deg != b.deg) return a.deg > b.deg;
    for (int i = nvars - 1; i >= 0; --i) {
        int d = int(a.e[size_t(i)]) - int(b.e[size_t(i)]);
        if (d != 0) return d < 0;
    }
    return false;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[size_t(i)] > b.e[size_t(i)]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[size_t(i)] = uint8_t(a.e[size_t(i)] + b.e[size_t(i)]);
    r.deg = uint16_t(a.deg + b.deg);
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[size_t(i)] = uint8_t(a.e[size_t(i)] - b.e[size_t(i)]);
    r.deg = uint16_t(a.deg - b.deg);
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[size_t(i)] = std::max(a.e[size_t(i)], b.e[size_t(i)]);
        d += r.e[size_t(i)];
    }
    r.deg = uint16_t(d);
    return r;
}

std::string mono_str(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < names.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (m.e[i] > 1) os << "^" << int(m.e[i]);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {

struct MonoLess {
    int nvars;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_greater(b, a, nvars);  // ascending comparator
    }
};

ExactPoly collect(int nvars, ExtKind k, std::map<Monomial, ExactScalar, MonoLess>&& acc) {
    ExactPoly r;
    r.nvars = nvars;
    r.field = k;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) r.terms.push_back({it->first, it->second});
    return r;
}

}  // namespace

ExactPoly exact_zero(int nvars, ExtKind k) { return {nvars, k, {}}; }

ExactPoly exact_from_terms(int nvars, ExtKind k, std::vector<ExactTerm> terms) {
    std::map<Monomial, ExactScalar, MonoLess> acc(MonoLess{nvars});
    for (auto& t : terms) {
        auto [it, fresh] = acc.emplace(t.m, t.c);
        if (!fresh) it->second = add(it->second, t.c);
    }
    return collect(nvars, k, std::move(acc));
}

ExactPoly exact_add(const ExactPoly& f, const ExactPoly& g) {
    assert(f.nvars == g.nvars && f.field == g.field);
    std::vector<ExactTerm> all = f.terms;
    all.insert(all.end(), g.terms.begin(), g.terms.end());
    return exact_from_terms(f.nvars, f.field, std::move(all));
}

ExactPoly exact_sub(const ExactPoly& f, const ExactPoly& g) {
    return exact_add(f, exact_scale(g, ExactScalar(-1)));
}

ExactPoly exact_scale(const ExactPoly& f, const ExactScalar& s) {
    if (s.is_zero()) return exact_zero(f.nvars, f.field);
    ExactPoly r = f;
    for (auto& t : r.terms) t.c = mul(f.field, t.c, s);
    return r;
}

ExactPoly exact_mul(const ExactPoly& f, const ExactPoly& g) {
    assert(f.nvars == g.nvars && f.field == g.field);
    std::map<Monomial, ExactScalar, MonoLess> acc(MonoLess{f.nvars});
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
            Monomial m = mono_mul(a.m, b.m);
            ExactScalar c = mul(f.field, a.c, b.c);
            auto [it, fresh] = acc.emplace(m, c);
            if (!fresh) it->second = add(it->second, c);
        }
    return collect(f.nvars, f.field, std::move(acc));
}

ExactPoly exact_pow(const ExactPoly& f, int e) {
    ExactPoly r = exact_from_terms(f.nvars, f.field, {{Monomial{}, ExactScalar(1)}});
    for (int i = 0; i < e; ++i) r = exact_mul(r, f);
    return r;
}

ExactPoly exact_derivative(const ExactPoly& f, int var) {
    std::vector<ExactTerm> out;
    for (const auto& t : f.terms) {
        int e = t.m.e[size_t(var)];
        if (e == 0) continue;
        Monomial m = t.m;
        m.set(var, uint8_t(e - 1));
        out.push_back({m, mul(f.field, t.c, ExactScalar(e))});
    }
    return exact_from_terms(f.nvars, f.field, std::move(out));
}

ExactPoly exact_substitute(const ExactPoly& f, const std::vector<ExactPoly>& images) {
    assert(int(images.size()) == f.nvars);
    int out_vars = images.empty() ? 0 : images[0].nvars;
    ExtKind k = f.field;
    ExactPoly acc = exact_zero(out_vars, k);
    for (const auto& t : f.terms) {
        ExactPoly term = exact_from_terms(out_vars, k, {{Monomial{}, t.c}});
        for (int v = 0; v < f.nvars; ++v) {
            int e = t.m.e[size_t(v)];
            if (e) term = exact_mul(term, exact_pow(images[size_t(v)], e));
        }
        acc = exact_add(acc, term);
    }
    return acc;
}

ExactPoly exact_normalize(const ExactPoly& f) {
    if (f.is_zero()) return f;
    return exact_scale(f, inverse(f.field, f.leading().c));
}

bool exact_proportional(const ExactPoly& f, const ExactPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.terms.size() != g.terms.size()) return false;
    ExactScalar lam = mul(f.field, f.leading().c, inverse(f.field, g.leading().c));
    for (size_t i = 0; i < f.terms.size(); ++i) {
        if (f.terms[i].m != g.terms[i].m) return false;
        if (f.terms[i].c != mul(f.field, lam, g.terms[i].c)) return false;
    }
    return true;
}

std::string exact_str(const ExactPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms) {
        std::string c = t.c.str();
        if (!first) os << (c[0] == '-' ? " - " : " + ");
        else if (c[0] == '-') os << "-";
        std::string cabs = (c[0] == '-') ? c.substr(1) : c;
        if (t.m.deg == 0) os << cabs;
        else if (cabs == "1") os << mono_str(t.m, names);
        else os << cabs << "*" << mono_str(t.m, names);
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------------ mod side

ModPoly specialize(const ExactPoly& f, const PrimeField& F) {
    ModPoly r;
    r.nvars = f.nvars;
    for (const auto& t : f.terms) {
        uint64_t c = F.reduce(t.c);
        if (c) r.terms.push_back({t.m, c});
    }
    return r;
}

ModPoly mod_add(const PrimeField& F, const ModPoly& f, const ModPoly& g) {
    ModPoly r;
    r.nvars = f.nvars;
    size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size() ||
            (i < f.terms.size() && degrevlex_greater(f.terms[i].m, g.terms[j].m, f.nvars))) {
            r.terms.push_back(f.terms[i++]);
        } else if (i == f.terms.size() || degrevlex_greater(g.terms[j].m, f.terms[i].m, f.nvars)) {
            r.terms.push_back(g.terms[j++]);
        } else {
            uint64_t c = F.add(f.terms[i].c, g.terms[j].c);
            if (c) r.terms.push_back({f.terms[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

ModPoly mod_scale_mono(const PrimeField& F, const ModPoly& f, const Monomial& m, uint64_t c) {
    ModPoly r;
    r.nvars = f.nvars;
    if (c == 0) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({mono_mul(t.m, m), F.mul(t.c, c)});
    return r;
}

ModPoly mod_monic(const PrimeField& F, const ModPoly& f) {
    if (f.is_zero() || f.leading().c == 1) return f;
    uint64_t s = F.inv(f.leading().c);
    ModPoly r = f;
    for (auto& t : r.terms) t.c = F.mul(t.c, s);
    return r;
}

// ------------------------------------------------------------------- parsing

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& why) {
    throw std::runtime_error("polynomial parse error at position " + std::to_string(pos) +
                             " in '" + text + "': " + why);
}

// split a maximal identifier run into known symbol names, longest match first
std::vector<std::string> split_run(const std::string& run,
                                   const std::vector<std::string>& symbols,
                                   const std::string& text, size_t pos) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < run.size()) {
        std::string best;
        for (const auto& s : symbols)
            if (run.compare(i, s.size(), s) == 0 && s.size() > best.size()) best = s;
        if (best.empty()) parse_fail(text, pos + i, "unknown symbol in '" + run + "'");
        out.push_back(best);
        i += best.size();
    }
    return out;
}

}  // namespace

ExactPoly parse_poly(const std::string& text, const std::vector<std::string>& variables,
                     ExtKind field) {
    std::vector<std::string> symbols = variables;
    symbols.push_back("sqrt2");
    symbols.push_back("omega");
    auto var_index = [&](const std::string& name) -> int {
        for (size_t v = 0; v < variables.size(); ++v)
            if (variables[v] == name) return int(v);
        return -1;
    };

    Cursor c{text};
    std::vector<ExactTerm> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            parse_fail(text, c.i, "expected + or - between terms");
        }
        first = false;

        ExactScalar coeff(sign);
        Monomial m;
        bool saw_factor = false;
        bool expecting_factor = true;
        while (true) {
            c.skip_ws();
            if (c.i >= c.s.size()) break;
            ch = c.s[c.i];
            if (ch == '+' || ch == '-') break;
            if (ch == '*') {
                ++c.i;
                expecting_factor = true;
                continue;
            }
            if (isdigit(static_cast<unsigned char>(ch))) {
                size_t start = c.i;
                while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
                mpz_class n(c.s.substr(start, c.i - start));
                coeff = mul(field, coeff, ExactScalar(mpq_class(n)));
                saw_factor = true;
                expecting_factor = false;
                continue;
            }
            if (isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                size_t start = c.i;
                while (c.i < c.s.size() &&
                       (isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
                    ++c.i;
                std::string run = c.s.substr(start, c.i - start);
                auto names = split_run(run, symbols, text, start);
                // a trailing ^exponent applies to the last name of the run
                int exp_last = 1;
                if (c.i < c.s.size() && c.s[c.i] == '^') {
                    ++c.i;
                    size_t es = c.i;
                    while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
                    if (es == c.i) parse_fail(text, c.i, "missing exponent after ^");
                    exp_last = std::stoi(c.s.substr(es, c.i - es));
                }
                for (size_t k = 0; k < names.size(); ++k) {
                    int e = (k + 1 == names.size()) ? exp_last : 1;
                    if (names[k] == "sqrt2") {
                        if (field != ExtKind::Sqrt2)
                            parse_fail(text, start, "sqrt2 outside a Q(sqrt2) context");
                        for (int t = 0; t < e; ++t)
                            coeff = mul(field, coeff, ExactScalar(0, 1));
                    } else if (names[k] == "omega") {
                        if (field != ExtKind::Omega)
                            parse_fail(text, start, "omega outside a Q(omega) context");
                        for (int t = 0; t < e; ++t)
                            coeff = mul(field, coeff, ExactScalar(0, 1));
                    } else {
                        int v = var_index(names[k]);
                        if (v < 0) parse_fail(text, start, "unknown variable " + names[k]);
                        m.set(v, uint8_t(m[v] + e));
                    }
                }
                saw_factor = true;
                expecting_factor = false;
                continue;
            }
            parse_fail(text, c.i, std::string("unexpected character '") + ch + "'");
        }
        if (!saw_factor || expecting_factor) parse_fail(text, c.i, "empty term");
        terms.push_back({m, coeff});
    }
    if (terms.empty()) parse_fail(text, 0, "empty polynomial");
    return exact_from_terms(int(variables.size()), field, std::move(terms));
}

ExactScalar parse_scalar(const std::string& text, ExtKind field) {
    ExactPoly p = parse_poly(text, {}, field);
    ExactScalar s;
    for (const auto& t : p.terms) s = add(s, t.c);
    return s;
}

}  // namespace fano::poly
