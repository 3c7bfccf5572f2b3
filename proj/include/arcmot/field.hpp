#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "arcmot/errors.hpp"

namespace arcmot {

// Exact coefficient field: the rationals or a prime field F_p.
// Elements are carried as mpq_class everywhere; over F_p the canonical
// representative is an integer in [0, p) with denominator 1.
class CoefficientField {
  public:
    enum class Kind { Rationals, Prime };

    static CoefficientField rationals() { return CoefficientField(Kind::Rationals, 0); }
    static CoefficientField prime(unsigned long p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const CoefficientField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoefficientField& o) const { return !(*this == o); }

    // Canonical form of a coefficient in this field.
    mpq_class normalize(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
    mpq_class neg(const mpq_class& a) const { return normalize(-a); }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    std::string to_string() const;

  private:
    CoefficientField(Kind k, unsigned long p) : kind_(k), p_(p) {}
    Kind kind_;
    unsigned long p_;
};

bool is_prime_u64(unsigned long n);

}  // namespace arcmot
