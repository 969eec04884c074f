#include "fano/matgroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace fano::matgroup {

using exactmat::Int;

std::string StructureTag::name() const {
    switch (kind) {
        case trivial: return "0";
        case Z2: return "Z2";
        case Z3: return "Z3";
        case Z2xZ2: return "Z2xZ2";
        case Z4: return "Z4";
        case S3: return "S3";
        case Z6: return "Z6";
        case Z2xZ2xZ2: return "Z2xZ2xZ2";
        case D4: return "D4";
        case Q8: return "Q8";
        case A4: return "A4";
        case Dic3: return "Dic3";
        case Z2xS3: return "Z2xS3";
        case S4: return "S4";
        case other: return "other(" + std::to_string(order) + ")";
    }
    return "?";
}

StructureTag tag_from_name(const std::string& name) {
    static const std::map<std::string, StructureTag> table = {
        {"trivial", {StructureTag::trivial, 1}}, {"0", {StructureTag::trivial, 1}},
        {"Z2", {StructureTag::Z2, 2}},           {"Z3", {StructureTag::Z3, 3}},
        {"Z2xZ2", {StructureTag::Z2xZ2, 4}},     {"Z4", {StructureTag::Z4, 4}},
        {"S3", {StructureTag::S3, 6}},           {"Z6", {StructureTag::Z6, 6}},
        {"Z2xZ2xZ2", {StructureTag::Z2xZ2xZ2, 8}},
        {"D4", {StructureTag::D4, 8}},           {"Q8", {StructureTag::Q8, 8}},
        {"A4", {StructureTag::A4, 12}},          {"Dic3", {StructureTag::Dic3, 12}},
        {"Z2xS3", {StructureTag::Z2xS3, 12}},    {"S4", {StructureTag::S4, 24}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::runtime_error("unknown structure tag: " + name);
    return it->second;
}

MatrixGroup MatrixGroup::generate_closure(const std::vector<IntMatrix>& generators, size_t cap) {
    assert(!generators.empty());
    int n = generators[0].rows();
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw std::runtime_error("generators must be square of equal rank");
        Int d = exactmat::det(g);
        if (d != 1 && d != -1) throw NotInvertibleOverZ();
    }
    std::set<IntMatrix> seen;
    std::vector<IntMatrix> work;
    IntMatrix id = IntMatrix::identity(n);
    seen.insert(id);
    work.push_back(id);
    for (const auto& g : generators) {
        if (seen.insert(g).second) work.push_back(g);
    }
    size_t head = 0;
    while (head < work.size()) {
        IntMatrix a = work[head++];
        for (const auto& g : generators) {
            IntMatrix b = a * g;
            if (seen.insert(b).second) {
                if (seen.size() > cap) throw CapExceeded(cap);
                work.push_back(b);
            }
        }
    }
    MatrixGroup grp;
    grp.rank_ = n;
    grp.elements_.assign(seen.begin(), seen.end());
    for (const auto& g : generators) {
        auto it = std::lower_bound(grp.elements_.begin(), grp.elements_.end(), g);
        grp.generator_indices_.push_back(size_t(it - grp.elements_.begin()));
    }
    return grp;
}

MatrixGroup MatrixGroup::from_closed_set(std::vector<IntMatrix> elements) {
    assert(!elements.empty());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    MatrixGroup grp;
    grp.rank_ = elements[0].rows();
    grp.elements_ = std::move(elements);
    grp.validate_closed();
    return grp;
}

void MatrixGroup::validate_closed() const {
    bool has_id = false;
    for (const auto& a : elements_) {
        if (a.is_identity()) has_id = true;
        for (const auto& b : elements_) {
            if (!contains(a * b)) throw std::runtime_error("element set is not closed");
        }
    }
    if (!has_id) throw std::runtime_error("closed set lacks the identity");
}

bool MatrixGroup::contains(const IntMatrix& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
}

bool MatrixGroup::same_elements(const MatrixGroup& o) const {
    return elements_ == o.elements_;
}

bool MatrixGroup::is_abelian() const {
    for (size_t i = 0; i < elements_.size(); ++i)
        for (size_t j = i + 1; j < elements_.size(); ++j)
            if (elements_[i] * elements_[j] != elements_[j] * elements_[i]) return false;
    return true;
}

size_t MatrixGroup::element_order(const IntMatrix& m) const {
    IntMatrix p = m;
    for (size_t k = 1; k <= elements_.size(); ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    throw std::runtime_error("element order exceeds group order");
}

size_t MatrixGroup::center_order() const {
    size_t c = 0;
    for (const auto& a : elements_) {
        bool central = true;
        for (const auto& b : elements_)
            if (a * b != b * a) {
                central = false;
                break;
            }
        if (central) ++c;
    }
    return c;
}

namespace {

std::multiset<size_t> order_multiset(const MatrixGroup& g) {
    std::multiset<size_t> ms;
    for (const auto& m : g.elements()) ms.insert(g.element_order(m));
    return ms;
}

size_t count_of(const std::multiset<size_t>& ms, size_t k) { return ms.count(k); }

}  // namespace

StructureTag identify_structure(const MatrixGroup& g) {
    size_t n = g.order();
    StructureTag out{StructureTag::other, n};
    if (n == 1) return {StructureTag::trivial, 1};
    if (n == 2) return {StructureTag::Z2, 2};
    if (n == 3) return {StructureTag::Z3, 3};
    bool ab = g.is_abelian();
    auto ords = order_multiset(g);
    if (n == 4) return ab && count_of(ords, 4) > 0 ? StructureTag{StructureTag::Z4, 4}
                                                   : StructureTag{StructureTag::Z2xZ2, 4};
    if (n == 6) return ab ? StructureTag{StructureTag::Z6, 6} : StructureTag{StructureTag::S3, 6};
    if (n == 8) {
        if (ab) {
            if (count_of(ords, 2) == 7) return {StructureTag::Z2xZ2xZ2, 8};
            return out;  // Z8 / Z4xZ2: outside the catalog
        }
        if (count_of(ords, 4) == 2) return {StructureTag::D4, 8};
        if (count_of(ords, 4) == 6) return {StructureTag::Q8, 8};
        return out;
    }
    if (n == 12) {
        if (ab) return out;
        if (count_of(ords, 3) == 8) return {StructureTag::A4, 12};
        if (count_of(ords, 4) == 6) return {StructureTag::Dic3, 12};
        if (count_of(ords, 2) == 7 && g.center_order() == 2) return {StructureTag::Z2xS3, 12};
        return out;
    }
    if (n == 24) {
        if (!ab && count_of(ords, 2) == 9 && count_of(ords, 3) == 8 && count_of(ords, 4) == 6)
            return {StructureTag::S4, 24};
        return out;
    }
    return out;
}

std::vector<MatrixGroup> enumerate_subgroups(const MatrixGroup& g) {
    if (g.order() > 24) throw std::runtime_error("subgroup enumeration restricted to order <= 24");
    std::set<std::vector<IntMatrix>> seen;
    std::vector<MatrixGroup> out;
    auto add = [&](const std::vector<IntMatrix>& gens) {
        MatrixGroup h = MatrixGroup::generate_closure(gens, g.order());
        if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    };
    const auto& els = g.elements();
    for (size_t i = 0; i < els.size(); ++i) {
        add({els[i]});
        for (size_t j = i + 1; j < els.size(); ++j) add({els[i], els[j]});
    }
    if (!seen.count(els)) out.push_back(g);
    // deterministic order: by order, then by element list
    std::sort(out.begin(), out.end(), [](const MatrixGroup& a, const MatrixGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace fano::matgroup
