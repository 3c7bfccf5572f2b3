#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcmot/fatpoint.hpp"

namespace arcmot {

struct ArcProvenance {
    std::string source;                            // defining ideal of the source scheme
    std::string fat;                               // defining ideal of the fat point
    std::vector<std::string> basis;                // standard monomials, ascending
    std::map<std::string, std::string> flat_names; // grid name -> flat "a<k>" bookkeeping name
};

// Presentation of the arc space of a scheme along a fat point: the grid of
// coefficient variables a_<i>_<j> (source variable i, basis monomial j) and
// the extracted coefficient equations, interreduced and deterministically
// ordered.
struct ArcPresentation {
    RingPtr grid_ring;
    std::vector<std::vector<std::string>> grid;  // grid[i][j]
    std::vector<Polynomial> generators;
    Ideal source_ideal;
    Ideal fat_ideal;
    ArcProvenance provenance;

    Ideal ideal() const { return Ideal(grid_ring, generators); }
};

struct ArcOptions {
    GroebnerOptions groebner;
    bool interreduce = true;
};

// The general arc alpha_i = sum_j a_<i>_<j> b_j is substituted into every
// generator of the source ideal; coefficients of the standard monomials b_j
// generate the output.
ArcPresentation arc_space(const AffineScheme& X, const FatPoint& fat, const ArcOptions& opts = {});

// Auto-arc space of order n at a rational point: the arc space of the n-jet
// along itself, with the jet presented on its own ambient variables.
ArcPresentation auto_arc(const AffineScheme& X, const std::vector<mpq_class>& point, unsigned n,
                         const ArcOptions& opts = {});

// View the presentation as an affine scheme (its own grid ring).
AffineScheme as_scheme(const ArcPresentation& arc);

}  // namespace arcmot
