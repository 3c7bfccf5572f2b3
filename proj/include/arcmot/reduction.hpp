#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "arcmot/arcspace.hpp"

namespace arcmot {

enum class ReductionFlag { RadicalCertified, HeuristicFixpoint };

// Fixpoint of the reduction rules: interreduce; squarefree parts of monomial
// generators; pure-power kills; linear eliminations. Sound pointwise: the
// residual-plus-free presentation has the same field-valued points as the
// input.
struct ReducedPresentation {
    RingPtr ring;
    std::vector<std::string> all_vars;            // the grid variables
    std::set<std::string> killed;                 // forced to zero
    std::map<std::string, Polynomial> substitutions;
    std::vector<std::string> free_vars;           // absent from residual
    std::vector<Polynomial> residual;             // interreduced
    ReductionFlag flag = ReductionFlag::RadicalCertified;

    std::size_t affine_rank() const { return free_vars.size(); }
    bool certified() const { return flag == ReductionFlag::RadicalCertified; }
};

struct ReductionOptions {
    std::uint64_t max_passes = 10'000;
};

ReducedPresentation heuristic_reduce(const ArcPresentation& arc, const ReductionOptions& opts = {});
ReducedPresentation heuristic_reduce(const Ideal& ideal, const ReductionOptions& opts = {});

// Connected components of the variable-interaction graph of the residual.
// Each factor lives in its own ring on exactly the component's variables.
struct Decomposition {
    std::size_t affine_rank = 0;
    std::vector<Ideal> factors;
};

Decomposition decompose(const ReducedPresentation& red);

// affine_rank when the residual is empty, otherwise nothing.
std::optional<std::size_t> is_affine_space(const ReducedPresentation& red);

}  // namespace arcmot
