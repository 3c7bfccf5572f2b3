#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcmot/errors.hpp"

namespace arcmot {

// Integer Laurent polynomial in the Lefschetz class L. Classes of all
// varieties in scope live here.
class MotiveClass {
  public:
    MotiveClass() = default;
    static MotiveClass zero() { return MotiveClass(); }
    static MotiveClass one() { return L_power(0); }
    static MotiveClass L() { return L_power(1); }
    static MotiveClass L_power(long e, const mpz_class& c = 1);
    static MotiveClass integer(const mpz_class& n) { return L_power(0, n); }

    const std::map<long, mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(long e) const;

    MotiveClass operator+(const MotiveClass& o) const;
    MotiveClass operator-(const MotiveClass& o) const;
    MotiveClass operator-() const;
    MotiveClass operator*(const MotiveClass& o) const;
    MotiveClass pow(unsigned n) const;
    bool operator==(const MotiveClass& o) const { return c_ == o.c_; }
    bool operator!=(const MotiveClass& o) const { return !(*this == o); }

    // Top L-exponent; nothing for the zero class (dimension -infinity).
    std::optional<long> dim() const;
    long low_exponent() const;  // smallest exponent, requires nonzero

    // Substitute L = q exactly.
    mpq_class evaluate_at_q(const mpq_class& q) const;

    // True when the class is +-L^a.
    std::optional<std::pair<long, int>> as_unit() const;

    std::string to_string() const;

  private:
    std::map<long, mpz_class> c_;
    void trim();
};

// Truncated power series in t over MotiveClass; arithmetic never reads past
// the truncation order.
class MotiveSeries {
  public:
    MotiveSeries() = default;
    explicit MotiveSeries(std::size_t truncation) : a_(truncation + 1) {}

    std::size_t truncation() const { return a_.empty() ? 0 : a_.size() - 1; }
    const MotiveClass& coeff(std::size_t n) const;
    void set_coeff(std::size_t n, MotiveClass c);
    const std::vector<MotiveClass>& coeffs() const { return a_; }

    MotiveSeries operator+(const MotiveSeries& o) const;
    MotiveSeries operator-(const MotiveSeries& o) const;
    MotiveSeries operator*(const MotiveSeries& o) const;  // truncation = min
    MotiveSeries scale(const MotiveClass& c) const;
    MotiveSeries truncate(std::size_t T) const;

    bool operator==(const MotiveSeries& o) const { return a_ == o.a_; }

  private:
    std::vector<MotiveClass> a_;
};

// t -> t^r; the truncation order multiplies.
MotiveSeries substitute_t_power(const MotiveSeries& s, unsigned r);
// Keep exponents congruent to offset mod q.
MotiveSeries star_filter(const MotiveSeries& s, unsigned q, unsigned offset);
// Formal truncated evaluation at t = L^{-1}.
MotiveClass evaluate_at_L_inverse(const MotiveSeries& s);

// Rational function in t with MotiveClass coefficients; the denominator's
// constant term must be a unit +-L^a for expansion.
struct MotiveRational {
    std::vector<MotiveClass> num;
    std::vector<MotiveClass> den;

    std::string to_string() const;
};

MotiveSeries expand_rational(const MotiveRational& r, std::size_t T);

// Smallest linear recurrence over the fraction field Q(L) fitting every
// coefficient; returned with Laurent coefficients after clearing
// denominators. Requires T >= 2*max_den_degree + 2.
std::optional<MotiveRational> detect_rationality(const MotiveSeries& s, std::size_t max_den_degree);

}  // namespace arcmot
