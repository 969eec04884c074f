#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fano/registry.hpp"

namespace fano::registry {

using nlohmann::json;

namespace {

IntMatrix matrix_from_json(const json& j) {
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        std::vector<Int> r;
        for (const auto& x : row) r.emplace_back(x.get<long>());
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

std::vector<Int> ivec_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.emplace_back(x.get<long>());
    return v;
}

// the 105 Mori-Mukai ids
bool valid_id(const std::string& id) {
    auto dot = id.find('.');
    if (dot == std::string::npos) return false;
    int rho, n;
    try {
        rho = std::stoi(id.substr(0, dot));
        n = std::stoi(id.substr(dot + 1));
    } catch (...) {
        return false;
    }
    static const std::map<int, int> counts{{1, 17}, {2, 36}, {3, 31}, {4, 13},
                                           {5, 3},  {6, 1},  {7, 1},  {8, 1},
                                           {9, 1},  {10, 1}};
    auto it = counts.find(rho);
    return it != counts.end() && n >= 1 && n <= it->second;
}

// Table 1: the nontrivial Weyl groups for rho <= 5
const std::map<std::string, std::string>& weyl_table() {
    static const std::map<std::string, std::string> t = [] {
        std::map<std::string, std::string> m;
        for (const char* id :
             {"2.2", "2.6", "2.12", "2.21", "2.32", "3.3", "3.7", "3.9", "3.10", "3.17",
              "3.19", "3.20", "3.25", "3.31", "4.3", "4.4", "4.7", "4.8", "4.10", "4.12",
              "4.13", "5.2"})
            m[id] = "Z2";
        for (const char* id : {"3.1", "3.13", "3.27", "4.6", "5.1"}) m[id] = "S3";
        m["4.2"] = "Z2xZ2";
        m["4.1"] = "S4";
        m["5.3"] = "Z2xS3";
        return m;
    }();
    return t;
}

VarietyDef variety_from_json(const json& j) {
    VarietyDef v;
    v.name = j.at("name").get<std::string>();
    v.role = j.at("role").get<std::string>();
    for (const auto& e : j.at("equations")) v.equations.push_back(e.get<std::string>());
    for (const auto& d : j.at("multidegrees")) v.multidegrees.push_back(d.get<std::vector<int>>());
    v.codim = j.at("codim").get<int>();
    v.complete_intersection = j.at("complete_intersection").get<bool>();
    return v;
}

AutoDef auto_from_json(const json& j) {
    AutoDef a;
    a.name = j.at("name").get<std::string>();
    a.non_ambient = j.value("non_ambient", false);
    if (j.contains("factor_map")) a.factor_map = j.at("factor_map").get<std::vector<int>>();
    if (j.contains("matrices"))
        for (const auto& m : j.at("matrices")) {
            std::vector<std::vector<std::string>> block;
            for (const auto& row : m) block.push_back(row.get<std::vector<std::string>>());
            a.matrices.push_back(std::move(block));
        }
    if (j.contains("invariant_varieties"))
        a.invariant_varieties = j.at("invariant_varieties").get<std::vector<std::string>>();
    if (j.contains("invariant_ideals"))
        for (const auto& ideal : j.at("invariant_ideals"))
            a.invariant_ideals.push_back(ideal.get<std::vector<std::string>>());
    if (j.contains("point_permutation"))
        a.point_permutation = j.at("point_permutation").get<std::vector<int>>();
    if (j.contains("component_permutation"))
        a.component_permutation = j.at("component_permutation").get<std::vector<int>>();
    const auto& pic = j.at("pic");
    a.pic.type = pic.at("type").get<std::string>();
    a.pic.base = pic.value("base", "");
    if (pic.contains("exceptional_permutation"))
        a.pic.exceptional_permutation = pic.at("exceptional_permutation").get<std::vector<int>>();
    a.pic_matrix = matrix_from_json(j.at("pic_matrix"));
    return a;
}

ConstructionDef construction_from_json(const json& j) {
    ConstructionDef c;
    c.label = j.value("label", "main");
    c.kind = j.at("kind").get<std::string>();
    c.field = j.at("field").get<std::string>();
    c.ambient = j.at("ambient").get<std::vector<int>>();
    for (const auto& grp : j.at("variables"))
        c.variables.push_back(grp.get<std::vector<std::string>>());
    if (j.contains("varieties"))
        for (const auto& v : j.at("varieties")) c.varieties.push_back(variety_from_json(v));
    if (j.contains("points"))
        for (const auto& p : j.at("points")) {
            PointDef pt;
            pt.name = p.at("name").get<std::string>();
            pt.coords = p.at("coords").get<std::vector<std::string>>();
            if (p.contains("on")) pt.on = p.at("on").get<std::vector<std::string>>();
            c.points.push_back(std::move(pt));
        }
    if (j.contains("parametrized_curves"))
        for (const auto& cv : j.at("parametrized_curves")) {
            CurveDef cd;
            cd.name = cv.at("name").get<std::string>();
            cd.role = cv.at("role").get<std::string>();
            for (const auto& comp : cv.at("components"))
                cd.components.push_back(comp.get<std::vector<std::string>>());
            cd.member_equations = cv.at("member_equations").get<std::vector<std::string>>();
            c.curves.push_back(std::move(cd));
        }
    if (j.contains("automorphisms"))
        for (const auto& a : j.at("automorphisms")) c.automorphisms.push_back(auto_from_json(a));
    c.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
    return c;
}

LatticeSection lattice_from_json(const json& j) {
    LatticeSection l;
    l.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
    for (const auto& g : j.at("generators")) {
        LatticeGen lg;
        lg.name = g.at("name").get<std::string>();
        lg.matrix = matrix_from_json(g.at("matrix"));
        lg.derivation = g.value("derivation", "");
        l.generators.push_back(std::move(lg));
    }
    if (j.contains("nef_generators"))
        for (const auto& v : j.at("nef_generators")) l.nef_generators.push_back(ivec_from_json(v));
    if (j.contains("anticanonical")) l.anticanonical = ivec_from_json(j.at("anticanonical"));
    l.anticanonical_derivation = j.value("anticanonical_derivation", "");
    if (j.contains("permutation_basis"))
        for (const auto& v : j.at("permutation_basis"))
            l.permutation_basis.push_back(ivec_from_json(v));
    if (j.contains("expected_permutations"))
        for (auto it = j.at("expected_permutations").begin();
             it != j.at("expected_permutations").end(); ++it)
            l.expected_permutations[it.key()] = it.value().get<std::vector<int>>();
    if (j.contains("expected_symmetry_order"))
        l.expected_symmetry_order = j.at("expected_symmetry_order").get<size_t>();
    return l;
}

CoxSection cox_from_json(const json& j) {
    CoxSection c;
    c.coordinates = j.at("coordinates").get<std::vector<std::string>>();
    c.grading = matrix_from_json(j.at("grading"));
    c.picard_basis = j.at("picard_basis").get<std::vector<int>>();
    for (const auto& m : j.at("irrelevant_monomials"))
        c.irrelevant_monomials.push_back(m.get<std::vector<int>>());
    for (const auto& p : j.at("permutations")) {
        CoxPermDef d;
        d.name = p.at("name").get<std::string>();
        d.perm = p.at("perm").get<std::vector<int>>();
        d.expected_matrix = matrix_from_json(p.at("expected_matrix"));
        c.permutations.push_back(std::move(d));
    }
    return c;
}

void validate(const FamilyRecord& r) {
    if (!valid_id(r.id)) throw ValidationError(r.id, "id");
    static const std::set<std::string> kinds{"divisor",      "complete_intersection",
                                             "double_cover", "blowup",
                                             "two_stage_blowup", "toric",
                                             "product",      "metadata_only"};
    if (!kinds.count(r.kind)) throw ValidationError(r.id, "kind");
    int rho = std::stoi(r.id.substr(0, r.id.find('.')));
    if (rho != r.picard_rank && rho <= 5) throw ValidationError(r.id, "picard_rank");
    if (rho <= 5) {
        auto it = weyl_table().find(r.id);
        std::string expect = it == weyl_table().end() ? "trivial" : it->second;
        if (r.expected_wg != expect) throw ValidationError(r.id, "expected_wg");
        if (r.id == "3.9" || r.id == "4.2") {
            if (r.expected_autp != "UNKNOWN") throw ValidationError(r.id, "expected_autp");
        } else if (r.id == "2.2") {
            if (r.expected_autp != "trivial" || r.expected_wg != "Z2")
                throw ValidationError(r.id, "expected_autp");
        } else if (r.expected_autp == "UNKNOWN") {
            throw ValidationError(r.id, "expected_autp");
        }
    }
    for (const auto& c : r.constructions) {
        if (c.ambient.size() != c.variables.size()) throw ValidationError(r.id, "variables");
        for (size_t f = 0; f < c.ambient.size(); ++f)
            if (int(c.variables[f].size()) != c.ambient[f] + 1)
                throw ValidationError(r.id, "variables");
        for (const auto& a : c.automorphisms) {
            if (a.non_ambient) continue;
            if (a.factor_map.size() != c.ambient.size()) throw ValidationError(r.id, a.name);
            for (size_t i = 0; i < a.factor_map.size(); ++i)
                if (c.ambient[i] != c.ambient[size_t(a.factor_map[i])])
                    throw ValidationError(r.id, a.name + ".factor_map");
        }
    }
}

}  // namespace

std::string default_registry_path() {
    if (const char* env = std::getenv("FANO_REGISTRY")) return env;
#ifdef FANO_DEFAULT_REGISTRY
    return FANO_DEFAULT_REGISTRY;
#else
    return "data/fano_registry.json";
#endif
}

std::vector<FamilyRecord> load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ParseError(std::string(e.what()));
    }
    if (!doc.contains("families")) throw ParseError("missing 'families' array");
    std::vector<FamilyRecord> out;
    std::set<std::string> seen;
    for (const auto& j : doc.at("families")) {
        FamilyRecord r;
        try {
            r.id = j.at("id").get<std::string>();
            r.picard_rank = j.at("picard_rank").get<int>();
            r.kind = j.at("kind").get<std::string>();
            r.expected_autp = j.at("expected_autp").get<std::string>();
            r.expected_wg = j.at("expected_wg").get<std::string>();
            if (j.contains("expected_wg_order"))
                r.expected_wg_order = j.at("expected_wg_order").get<long>();
            r.expected_h1_trivial = j.at("expected_h1_trivial").get<bool>();
            r.notes = j.value("notes", "");
            r.alias = j.value("alias", "");
            if (j.contains("constructions"))
                for (const auto& c : j.at("constructions"))
                    r.constructions.push_back(construction_from_json(c));
            if (j.contains("lattice")) r.lattice = lattice_from_json(j.at("lattice"));
            if (j.contains("cox")) r.cox = cox_from_json(j.at("cox"));
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("family " + r.id + ": " + e.what());
        }
        if (!seen.insert(r.id).second) throw ValidationError(r.id, "duplicate id");
        validate(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace fano::registry
