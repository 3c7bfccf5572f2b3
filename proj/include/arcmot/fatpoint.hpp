#pragma once

#include <optional>

#include "arcmot/ideal.hpp"

namespace arcmot {

// Affine scheme Spec k[x]/I with a proper ideal.
struct AffineScheme {
    RingPtr ring;
    Ideal ideal;

    static AffineScheme make(RingPtr ring, std::vector<Polynomial> gens) {
        return AffineScheme{ring, Ideal(ring, std::move(gens))};
    }
};

// Connected zero-dimensional algebra k[x]/I: cached Groebner basis, standard
// monomial basis (ascending, basis[0] = 1) and length.
class FatPoint {
  public:
    const RingPtr& ring() const { return gb_.ring(); }
    const Ideal& ideal() const { return gb_.source(); }
    const GroebnerBasis& gb() const { return gb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::size_t length() const { return basis_.size(); }

    friend FatPoint make_fat_point(const Ideal& ideal, const GroebnerOptions& opts);

  private:
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
};

// Builds a fat point, checking finite length and locality (every variable
// nilpotent modulo the ideal).
FatPoint make_fat_point(const Ideal& ideal, const GroebnerOptions& opts = {});

// The n-jet of X at a rational point p: translate p to the origin and quotient
// by the n-th power of the maximal ideal at the origin. n >= 1.
FatPoint jet(const AffineScheme& X, const std::vector<mpq_class>& point, unsigned n,
             const GroebnerOptions& opts = {});

// Product fat point on the disjoint union of the variables (right-hand
// variables renamed on clash); length multiplies.
FatPoint product_fat_point(const FatPoint& a, const FatPoint& b, const GroebnerOptions& opts = {});

// Spec k[t]/(t^n), the linear jet l_n.
FatPoint linear_jet(const CoefficientField& field, unsigned n, const std::string& var = "t",
                    MonomialOrder order = MonomialOrder::DegRevLex);

}  // namespace arcmot
