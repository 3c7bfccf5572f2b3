#pragma once

#include <cstdint>
#include <vector>

#include "arcmot/errors.hpp"

namespace arcmot {

enum class MonomialOrder { DegRevLex, Lex };

// Exponent vector with cached total degree. Arity is fixed by the ring.
class Monomial {
  public:
    Monomial() : deg_(0) {}
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)), deg_(0) {
        for (unsigned x : e_) deg_ += x;
    }

    std::size_t arity() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<unsigned>& exponents() const { return e_; }

    void set(std::size_t i, unsigned v) {
        deg_ = deg_ - e_[i] + v;
        e_[i] = v;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            unsigned long long s = (unsigned long long)e_[i] + o.e_[i];
            if (s > 0xffffffffull) throw budget_error("monomial exponent overflow");
            r.e_[i] = (unsigned)s;
        }
        unsigned long long d = (unsigned long long)deg_ + o.deg_;
        if (d > 0xffffffffull) throw budget_error("monomial degree overflow");
        r.deg_ = (unsigned)d;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Quotient; caller guarantees divisibility.
    Monomial quotient_by(const Monomial& d) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - d.e_[i];
        r.deg_ = deg_ - d.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(e_.size());
        unsigned d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    Monomial squarefree_part() const {
        Monomial r(e_.size());
        unsigned d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = e_[i] > 0 ? 1 : 0;
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    std::size_t support_size() const {
        std::size_t n = 0;
        for (unsigned x : e_)
            if (x > 0) ++n;
        return n;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<unsigned> e_;
    unsigned deg_;
};

// Returns <0, 0, >0 like a three-way comparison; positive means a > b.
inline int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.arity(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // DegRevLex: compare total degree, then the reversed exponent difference:
    // a > b iff the last index where they differ has a[i] < b[i].
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace arcmot
