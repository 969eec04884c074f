#pragma once
// Buchberger's algorithm over prime fields (optionally with an adjoined
// root), graded reverse lexicographic order, Gebauer-Moller pair elimination.

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fano/poly.hpp"

namespace fano::poly {

struct ChartTimeout : std::runtime_error {
    ChartTimeout() : std::runtime_error("Groebner computation exceeded its time budget") {}
};

struct GroebnerOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool stop_at_unit = false;  // early exit as soon as a unit normal form appears
};

struct GroebnerStats {
    uint64_t pairs_processed = 0;
    uint64_t reduction_steps = 0;
};

// reduced Groebner basis, monic, sorted by descending leading monomial
std::vector<ModPoly> groebner_basis(const PrimeField& F, std::vector<ModPoly> gens,
                                    const GroebnerOptions& opt = {},
                                    GroebnerStats* stats = nullptr);

// normal form of f with respect to a (not necessarily reduced) basis
ModPoly normal_form(const PrimeField& F, const ModPoly& f, const std::vector<ModPoly>& basis,
                    GroebnerStats* stats = nullptr);

// 1 in the ideal?  runs Buchberger with the unit early-exit
bool contains_one(const PrimeField& F, const std::vector<ModPoly>& gens,
                  const GroebnerOptions& opt = {}, GroebnerStats* stats = nullptr);

}  // namespace fano::poly
