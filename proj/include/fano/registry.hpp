#pragma once
// The family registry: record model, JSON loading with validation, per-family
// verification orchestration, and table rendering.

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/exactmat.hpp"
#include "fano/geometry.hpp"
#include "fano/matgroup.hpp"
#include "fano/toric.hpp"

namespace fano::registry {

using exactmat::Int;
using exactmat::IntMatrix;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& where)
        : std::runtime_error("registry parse error: " + where) {}
};
struct ValidationError : std::runtime_error {
    ValidationError(const std::string& id, const std::string& field)
        : std::runtime_error("registry validation error: family " + id + ", field " + field) {}
};

struct VarietyDef {
    std::string name, role;  // role: main | base | branch | center | center_component
    std::vector<std::string> equations;
    std::vector<std::vector<int>> multidegrees;
    int codim = 0;
    bool complete_intersection = false;
};

struct PointDef {
    std::string name;
    std::vector<std::string> coords;
    std::vector<std::string> on;  // variety names the point must lie on
};

struct CurveDef {
    std::string name, role;
    std::vector<std::vector<std::string>> components;  // per ambient factor
    std::vector<std::string> member_equations;
};

struct PicRule {
    std::string type;  // lefschetz | double_cover | blowup | explicit | none
    std::string base;  // for blowup: identity | lefschetz
    std::vector<int> exceptional_permutation;  // 1-based images
};

struct AutoDef {
    std::string name;
    bool non_ambient = false;
    std::vector<int> factor_map;
    std::vector<std::vector<std::vector<std::string>>> matrices;
    std::vector<std::string> invariant_varieties;
    std::vector<std::vector<std::string>> invariant_ideals;
    std::vector<int> point_permutation;      // 1-based
    std::vector<int> component_permutation;  // 1-based
    PicRule pic;
    IntMatrix pic_matrix;
};

struct ConstructionDef {
    std::string label, kind, field;
    std::vector<int> ambient;
    std::vector<std::vector<std::string>> variables;
    std::vector<VarietyDef> varieties;
    std::vector<PointDef> points;
    std::vector<CurveDef> curves;
    std::vector<AutoDef> automorphisms;
    std::vector<std::string> basis_labels;
};

struct LatticeGen {
    std::string name;
    IntMatrix matrix;
    std::string derivation;
};

struct LatticeSection {
    std::vector<std::string> basis_labels;
    std::vector<LatticeGen> generators;
    std::vector<std::vector<Int>> nef_generators;
    std::vector<Int> anticanonical;
    std::string anticanonical_derivation;
    std::vector<std::vector<Int>> permutation_basis;
    std::map<std::string, std::vector<int>> expected_permutations;  // 1-based images
    std::optional<size_t> expected_symmetry_order;
};

struct CoxPermDef {
    std::string name;
    std::vector<int> perm;  // 0-based images
    IntMatrix expected_matrix;
};

struct CoxSection {
    std::vector<std::string> coordinates;
    IntMatrix grading;
    std::vector<int> picard_basis;
    std::vector<std::vector<int>> irrelevant_monomials;
    std::vector<CoxPermDef> permutations;
};

struct FamilyRecord {
    std::string id;
    int picard_rank = 0;
    std::string kind;
    std::string expected_autp;  // tag name, "UNKNOWN", or a rho>=6 display name
    std::string expected_wg;
    std::optional<long> expected_wg_order;
    bool expected_h1_trivial = true;
    std::string notes, alias;
    std::vector<ConstructionDef> constructions;
    std::optional<LatticeSection> lattice;
    std::optional<CoxSection> cox;

    bool has_group_data() const { return lattice.has_value() || !constructions.empty(); }
};

std::vector<FamilyRecord> load_registry(const std::string& path);
std::string default_registry_path();

// ---------------------------------------------------------------- verification

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    // fixed check keys: smoothness, invariance, picard_action_match,
    // group_structure, containment_in_cone_symmetry, h1_all_subgroups,
    // toric_matrices, permutation_basis
    std::map<std::string, CheckResult> checks;
    std::string overall;  // PASS | FAIL | PARTIAL
    std::string computed_autp;  // display tag for the summary table
    std::vector<uint64_t> primes_used;
    uint64_t work_gb_pairs = 0;   // deterministic work counter
    long wall_ms = 0;             // excluded from determinism comparisons
};

struct VerifyConfig {
    std::vector<uint64_t> prime_pool{10007, 10009, 10037, 10039, 10061,
                                     10067, 10069, 10079, 10091, 10093};
    int primes_per_family = 3;
    std::chrono::milliseconds chart_budget{30000};
    int jobs = 1;
    uint64_t seed = 0;  // recorded in report headers only
};

VerificationReport verify_family(const FamilyRecord& record, const VerifyConfig& config);
std::vector<VerificationReport> verify_all(const std::vector<FamilyRecord>& records,
                                           const VerifyConfig& config);

// ------------------------------------------------------------------- rendering

enum class TableKind { Summary, Weyl, H1 };

std::string render_table(const std::vector<FamilyRecord>& records,
                         const std::vector<VerificationReport>& reports, TableKind kind);

std::string reports_to_json(const std::vector<FamilyRecord>& records,
                            const std::vector<VerificationReport>& reports,
                            const VerifyConfig& config);
// reconstructs enough state to render tables from a saved report file
std::vector<VerificationReport> reports_from_json(const std::string& json_text);

// display names in the paper's table style ("Z/2", "(Z/2)^2", "Z/2 x S3", ...)
std::string display_group_name(const std::string& tag);

}  // namespace fano::registry
