#include "arcmot/polynomial.hpp"

#include <algorithm>

namespace arcmot {

namespace {

struct MonCmpDesc {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b, order) > 0;
    }
};

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    Polynomial p(ring);
    mpq_class cc = ring->field().normalize(c);
    if (cc != 0) p.terms_.push_back({Monomial(ring->nvars()), cc});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, unsigned exp) {
    Polynomial p(ring);
    if (exp == 0) return constant(ring, 1);
    p.terms_.push_back({ring->var_monomial(index, exp), mpq_class(1)});
    return p;
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, const mpq_class& c) {
    Polynomial p(ring);
    mpq_class cc = ring->field().normalize(c);
    if (cc != 0) p.terms_.push_back({m, cc});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(ring);
    MonCmpDesc cmp{ring->order()};
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return cmp(a.mon, b.mon); });
    p.terms_ = std::move(terms);
    p.normalize_sorted();
    return p;
}

void Polynomial::normalize_sorted() {
    const auto& field = ring_->field();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coeff = field.add(out.back().coeff, t.coeff);
            if (out.back().coeff == 0) out.pop_back();
        } else {
            mpq_class c = field.normalize(t.coeff);
            if (c != 0) out.push_back({t.mon, c});
        }
    }
    terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
    return terms_.front();
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "add");
    const auto& field = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = field.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mon, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, ring_->field().neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ring_);
    mpq_class cc = ring_->field().normalize(c);
    if (cc == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, ring_->field().mul(t.coeff, cc)});
    return r;
}

Polynomial Polynomial::mul_scalar(const mpq_class& c) const {
    return mul_term(Monomial(ring_->nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "mul");
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    const auto& field = ring_->field();
    // Accumulate into an ordered map keyed descending by the ring order.
    std::map<Monomial, mpq_class, MonCmpDesc> acc{MonCmpDesc{ring_->order()}};
    const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
    for (const auto& s : small.terms_) {
        for (const auto& b : big.terms_) {
            Monomial m = s.mon * b.mon;
            mpq_class c = field.mul(s.coeff, b.coeff);
            auto [it, inserted] = acc.try_emplace(std::move(m), c);
            if (!inserted) {
                it->second = field.add(it->second, c);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!ring_->same(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::vector<int> Polynomial::occurring_vars() const {
    std::vector<char> seen(ring_ ? ring_->nvars() : 0, 0);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (t.mon[i] > 0) seen[i] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool Polynomial::contains_var(std::size_t index) const {
    for (const auto& t : terms_)
        if (t.mon[index] > 0) return true;
    return false;
}

std::optional<mpq_class> Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mon == m) return t.coeff;
    return std::nullopt;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::primitive_integer_form() const {
    if (is_zero()) return *this;
    if (ring_->field().is_prime_field()) return monic();
    // lcm of denominators, then gcd of numerators, sign from the leading term.
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& t : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    Polynomial r = mul_scalar(scale);
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (point.size() != ring_->nvars()) throw precondition_error("evaluation point arity mismatch");
    const auto& field = ring_->field();
    mpq_class acc(0);
    for (const auto& t : terms_) {
        mpq_class v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (unsigned e = 0; e < t.mon[i]; ++e) v = field.mul(v, point[i]);
        }
        acc = field.add(acc, v);
    }
    return acc;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::map<std::string, Polynomial>& images) const {
    // Power cache per variable.
    std::vector<std::vector<Polynomial>> powers(ring_->nvars());
    std::vector<const Polynomial*> image_of(ring_->nvars(), nullptr);
    for (int vi : occurring_vars()) {
        auto it = images.find(ring_->vars()[vi]);
        if (it == images.end())
            throw precondition_error("substitute: no image for variable '" + ring_->vars()[vi] + "'");
        require_same_ring(target, it->second.ring(), "substitute image");
        image_of[vi] = &it->second;
    }
    Polynomial acc(target);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            unsigned e = t.mon[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
            while (pw.size() <= e) pw.push_back(pw.back() * (*image_of[i]));
            term = term * pw[e];
        }
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::rename_into(const RingPtr& target,
                                   const std::map<std::string, std::string>& name_map) const {
    std::vector<int> tgt_index(ring_->nvars(), -1);
    for (int vi : occurring_vars()) {
        const std::string& name = ring_->vars()[vi];
        auto it = name_map.find(name);
        const std::string& tgt_name = it == name_map.end() ? name : it->second;
        int ti = target->var_index(tgt_name);
        if (ti < 0)
            throw precondition_error("rename: variable '" + tgt_name + "' not in target ring");
        tgt_index[vi] = ti;
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mon[i] == 0) continue;
            m.set(static_cast<std::size_t>(tgt_index[i]), m[tgt_index[i]] + t.mon[i]);
        }
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // The output must reparse under the grammar (no unary minus on variables),
    // so a leading negative term keeps an explicit coefficient: "-1*x^2 + ...".
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        mpq_class c = t.coeff;
        bool negative = c < 0;
        bool leading = i == 0;
        if (!leading) s += negative ? " - " : " + ";
        mpq_class a = negative ? mpq_class(-c) : c;
        std::string mon = ring_->monomial_string(t.mon);
        if (t.mon.is_one()) {
            s += (leading && negative ? "-" : "") + a.get_str();
        } else if (a == 1 && !(leading && negative)) {
            s += mon;
        } else {
            s += (leading && negative ? "-" : "") + a.get_str() + "*" + mon;
        }
    }
    return s;
}

}  // namespace arcmot
