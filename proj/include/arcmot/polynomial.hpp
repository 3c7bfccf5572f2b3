#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcmot/ring.hpp"

namespace arcmot {

struct Term {
    Monomial mon;
    mpq_class coeff;
};

// Exact multivariate polynomial. Terms are kept sorted descending in the
// ring's monomial order with no zero coefficients; this is the canonical form
// used by serialization and by all algebraic routines.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, std::size_t index, unsigned exp = 1);
    static Polynomial from_monomial(RingPtr ring, const Monomial& m, const mpq_class& c);
    // Builds canonical form from arbitrary (monomial, coeff) pairs.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const mpq_class& leading_coeff() const { return leading_term().coeff; }
    unsigned total_degree() const;  // 0 for the zero polynomial

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
    // Nonzero single-term test.
    bool is_monomial_multiple() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, const mpq_class& c) const;
    Polynomial mul_scalar(const mpq_class& c) const;
    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Variables that actually occur.
    std::vector<int> occurring_vars() const;
    bool contains_var(std::size_t index) const;
    std::optional<mpq_class> coeff_of(const Monomial& m) const;

    // Monic form (leading coefficient 1); integer-primitive form with positive
    // leading coefficient (kept for presentation-facing generator lists).
    Polynomial monic() const;
    Polynomial primitive_integer_form() const;

    // Evaluation at field elements, exact.
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    // Ring homomorphism determined by images of all occurring variables;
    // every image must live in `target`. Missing image for an occurring
    // variable is an error.
    Polynomial substitute(const RingPtr& target, const std::map<std::string, Polynomial>& images) const;

    // Transport to a structurally different ring by variable-name lookup.
    // Occurring variables must all be present in the target.
    Polynomial rename_into(const RingPtr& target,
                           const std::map<std::string, std::string>& name_map = {}) const;

    std::string to_string() const;

  private:
    void normalize_sorted();  // assumes terms sorted desc, merges dups, drops zeros
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace arcmot
