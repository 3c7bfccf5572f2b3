#pragma once

#include <set>

#include "arcmot/ideal.hpp"
#include "arcmot/motive.hpp"

namespace arcmot {

struct CountOptions {
    // Cap on p^(#occurring variables) for the brute-force sweep.
    unsigned long long budget = 1ull << 30;
};

// Exact number of F_p-points of V(I) in the full ambient affine space; the
// non-occurring variables contribute an analytic p^k multiplier.
mpz_class count_points(const Ideal& ideal_over_fp, const CountOptions& opts = {});

// Reduction of a rational ideal mod p; throws on bad reduction (a coefficient
// denominator divisible by p).
Ideal reduce_mod_p(const Ideal& ideal_over_q, unsigned long p);

struct InterpolateOptions {
    CountOptions count;
    std::set<unsigned long> excluded_chars;
    unsigned long first_prime = 2;
};

// Reconstructs the class of V(I) in Z[L] from point counts over d+1 primes
// via Lagrange interpolation, then checks one held-out prime. Throws a
// verification error when the counting function is not polynomial of degree
// <= d (or a prime has bad reduction that survives to the check).
MotiveClass interpolate_class(const Ideal& ideal_over_q, unsigned degree_bound,
                              const InterpolateOptions& opts = {});

}  // namespace arcmot
