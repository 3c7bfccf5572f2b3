#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "arcmot/ideal.hpp"

namespace arcmot {

struct RenamingOptions {
    unsigned max_occurring_vars = 12;
    std::uint64_t max_nodes = 2'000'000;  // backtracking nodes
    GroebnerOptions groebner;
};

// Searches for a bijection pi on occurring variables with pi(I) = J as
// ideals (mutual Groebner membership). Returns the variable-name map, or
// nullopt when no bijection exists. Requires equal occurring-variable counts.
std::optional<std::map<std::string, std::string>> equal_up_to_renaming(
    const Ideal& I, const Ideal& J, const RenamingOptions& opts = {});

// Verifies one specific candidate map (every occurring variable of I mapped).
bool renaming_matches(const Ideal& I, const Ideal& J, const std::map<std::string, std::string>& pi,
                      const GroebnerOptions& opts = {});

}  // namespace arcmot
