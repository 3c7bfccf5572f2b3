#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcmot/polynomial.hpp"

namespace arcmot {

// Generator list; the list order is presentation metadata only.
// Zero generators are dropped on construction.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    std::vector<int> occurring_vars() const;
    bool contains_one() const;  // via Groebner

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
    // Unit of account: one polynomial reduction step. The default is generous;
    // the instances in this project stay far below it.
    std::uint64_t max_steps = 50'000'000;
};

class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    GroebnerBasis(Ideal source, std::vector<Polynomial> basis)
        : source_(std::move(source)), basis_(std::move(basis)) {}

    const Ideal& source() const { return source_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    const RingPtr& ring() const { return source_.ring(); }
    bool contains_one() const { return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero(); }

  private:
    Ideal source_;
    std::vector<Polynomial> basis_;
};

// Reduced Groebner basis w.r.t. the ring's order; deterministic.
GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts = {});

// Full normal form (no term of the result is divisible by any leading
// monomial of the reducers).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// Monomials outside the leading-term ideal, sorted ascending in the ring
// order (so index 0 is the constant monomial 1). Throws when the quotient is
// infinite-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

// Generated by all n-fold products of generators; n >= 1.
Ideal ideal_power(const Ideal& ideal, unsigned n);

// Fixpoint interreduction of a generator list: every element fully reduced
// against the others, integer-primitive with positive leading coefficient,
// sorted by (total degree, leading monomial). Preserves the generated ideal.
std::vector<Polynomial> interreduce_basis(std::vector<Polynomial> gens);

struct DimensionOptions {
    GroebnerOptions groebner;
    unsigned max_subset_vars = 20;  // brute-force independent-set cap (2^20 subsets)
};

// Krull dimension of R/I; -1 for the unit ideal.
int dimension(const Ideal& ideal, const DimensionOptions& opts = {});

}  // namespace arcmot
