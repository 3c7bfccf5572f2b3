#include "arcmot/motive.hpp"

#include <algorithm>

namespace arcmot {

MotiveClass MotiveClass::L_power(long e, const mpz_class& c) {
    MotiveClass m;
    if (c != 0) m.c_[e] = c;
    return m;
}

mpz_class MotiveClass::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpz_class(0) : it->second;
}

void MotiveClass::trim() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

MotiveClass MotiveClass::operator+(const MotiveClass& o) const {
    MotiveClass r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] += c;
    r.trim();
    return r;
}

MotiveClass MotiveClass::operator-() const {
    MotiveClass r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

MotiveClass MotiveClass::operator-(const MotiveClass& o) const { return *this + (-o); }

MotiveClass MotiveClass::operator*(const MotiveClass& o) const {
    MotiveClass r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

MotiveClass MotiveClass::pow(unsigned n) const {
    MotiveClass r = one();
    MotiveClass b = *this;
    while (n > 0) {
        if (n & 1u) r = r * b;
        n >>= 1u;
        if (n > 0) b = b * b;
    }
    return r;
}

std::optional<long> MotiveClass::dim() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
}

long MotiveClass::low_exponent() const {
    if (c_.empty()) throw precondition_error("low_exponent of zero class");
    return c_.begin()->first;
}

mpq_class MotiveClass::evaluate_at_q(const mpq_class& q) const {
    mpq_class acc(0);
    for (const auto& [e, c] : c_) {
        mpq_class pw(1);
        if (e >= 0) {
            for (long k = 0; k < e; ++k) pw *= q;
        } else {
            if (q == 0) throw precondition_error("evaluate_at_q: q = 0 with negative exponent");
            for (long k = 0; k < -e; ++k) pw /= q;
        }
        acc += mpq_class(c) * pw;
    }
    return acc;
}

std::optional<std::pair<long, int>> MotiveClass::as_unit() const {
    if (c_.size() != 1) return std::nullopt;
    const auto& [e, c] = *c_.begin();
    if (c == 1) return std::make_pair(e, 1);
    if (c == -1) return std::make_pair(e, -1);
    return std::nullopt;
}

std::string MotiveClass::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    // Highest power first.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            s += a.get_str();
        } else {
            std::string lp = e == 1 ? "L" : "L^" + std::to_string(e);
            s += (a == 1 ? "" : a.get_str() + "*") + lp;
        }
    }
    return s;
}

const MotiveClass& MotiveSeries::coeff(std::size_t n) const {
    if (n >= a_.size()) throw precondition_error("series coefficient beyond truncation");
    return a_[n];
}

void MotiveSeries::set_coeff(std::size_t n, MotiveClass c) {
    if (n >= a_.size()) throw precondition_error("series coefficient beyond truncation");
    a_[n] = std::move(c);
}

MotiveSeries MotiveSeries::operator+(const MotiveSeries& o) const {
    std::size_t T = std::min(truncation(), o.truncation());
    MotiveSeries r(T);
    for (std::size_t n = 0; n <= T; ++n) r.a_[n] = a_[n] + o.a_[n];
    return r;
}

MotiveSeries MotiveSeries::operator-(const MotiveSeries& o) const {
    std::size_t T = std::min(truncation(), o.truncation());
    MotiveSeries r(T);
    for (std::size_t n = 0; n <= T; ++n) r.a_[n] = a_[n] - o.a_[n];
    return r;
}

MotiveSeries MotiveSeries::operator*(const MotiveSeries& o) const {
    std::size_t T = std::min(truncation(), o.truncation());
    MotiveSeries r(T);
    for (std::size_t i = 0; i <= T; ++i) {
        if (a_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= T; ++j) {
            if (o.a_[j].is_zero()) continue;
            r.a_[i + j] = r.a_[i + j] + a_[i] * o.a_[j];
        }
    }
    return r;
}

MotiveSeries MotiveSeries::scale(const MotiveClass& c) const {
    MotiveSeries r(truncation());
    for (std::size_t n = 0; n < a_.size(); ++n) r.a_[n] = a_[n] * c;
    return r;
}

MotiveSeries MotiveSeries::truncate(std::size_t T) const {
    if (T > truncation()) throw precondition_error("truncate: cannot extend a series");
    MotiveSeries r(T);
    for (std::size_t n = 0; n <= T; ++n) r.a_[n] = a_[n];
    return r;
}

MotiveSeries substitute_t_power(const MotiveSeries& s, unsigned r) {
    if (r == 0) throw precondition_error("substitute_t_power: r must be >= 1");
    MotiveSeries out(s.truncation() * r);
    for (std::size_t n = 0; n <= s.truncation(); ++n) out.set_coeff(n * r, s.coeff(n));
    return out;
}

MotiveSeries star_filter(const MotiveSeries& s, unsigned q, unsigned offset) {
    if (q == 0) throw precondition_error("star_filter: modulus must be >= 1");
    MotiveSeries out(s.truncation());
    for (std::size_t n = 0; n <= s.truncation(); ++n)
        if (n % q == offset % q) out.set_coeff(n, s.coeff(n));
    return out;
}

MotiveClass evaluate_at_L_inverse(const MotiveSeries& s) {
    MotiveClass acc;
    for (std::size_t n = 0; n <= s.truncation(); ++n)
        acc = acc + s.coeff(n) * MotiveClass::L_power(-static_cast<long>(n));
    return acc;
}

std::string MotiveRational::to_string() const {
    auto poly_str = [](const std::vector<MotiveClass>& p) {
        std::string s;
        bool any = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            if (any) s += " + ";
            any = true;
            s += "(" + p[i].to_string() + ")";
            if (i == 1) s += "*t";
            if (i > 1) s += "*t^" + std::to_string(i);
        }
        return any ? s : std::string("0");
    };
    return "[" + poly_str(num) + "] / [" + poly_str(den) + "]";
}

MotiveSeries expand_rational(const MotiveRational& r, std::size_t T) {
    if (r.den.empty() || r.den[0].is_zero())
        throw precondition_error("expand_rational: denominator constant term is zero");
    auto unit = r.den[0].as_unit();
    if (!unit) throw precondition_error("expand_rational: denominator constant term is not +-L^a");
    MotiveClass inv0 = MotiveClass::L_power(-unit->first, unit->second);
    MotiveSeries out(T);
    for (std::size_t n = 0; n <= T; ++n) {
        MotiveClass rhs = n < r.num.size() ? r.num[n] : MotiveClass::zero();
        for (std::size_t j = 1; j <= n && j < r.den.size(); ++j)
            rhs = rhs - r.den[j] * out.coeff(n - j);
        out.set_coeff(n, rhs * inv0);
    }
    return out;
}

}  // namespace arcmot
