#include <algorithm>

#include "arcmot/motive.hpp"

namespace arcmot {

namespace {

// Dense univariate polynomial over Q in the variable L, plus its fraction
// field. Only what the recurrence solver needs.
struct QLPoly {
    std::vector<mpq_class> c;  // c[i] * L^i

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    static QLPoly constant(const mpq_class& q) {
        QLPoly p;
        if (q != 0) p.c = {q};
        return p;
    }
    QLPoly operator+(const QLPoly& o) const {
        QLPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    QLPoly operator-() const {
        QLPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    QLPoly operator-(const QLPoly& o) const { return *this + (-o); }
    QLPoly operator*(const QLPoly& o) const {
        QLPoly r;
        if (is_zero() || o.is_zero()) return r;
        r.c.assign(c.size() + o.c.size() - 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    bool operator==(const QLPoly& o) const { return c == o.c; }
};

QLPoly gcd(QLPoly a, QLPoly b) {
    auto make_monic = [](QLPoly p) {
        if (!p.is_zero()) {
            mpq_class lead = p.c.back();
            for (auto& x : p.c) x /= lead;
        }
        return p;
    };
    while (!b.is_zero()) {
        // a mod b
        QLPoly r = a;
        while (!r.is_zero() && r.c.size() >= b.c.size()) {
            mpq_class q = r.c.back() / b.c.back();
            std::size_t shift = r.c.size() - b.c.size();
            for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= q * b.c[i];
            r.trim();
        }
        a = b;
        b = r;
    }
    return make_monic(a);
}

struct QLRat {
    QLPoly num, den;  // den monic, nonzero; gcd(num, den) = 1

    static QLRat zero() { return {QLPoly{}, QLPoly::constant(1)}; }
    static QLRat of(QLPoly n, QLPoly d) {
        QLRat r{std::move(n), std::move(d)};
        r.reduce();
        return r;
    }
    bool is_zero() const { return num.is_zero(); }
    void reduce() {
        if (num.is_zero()) {
            den = QLPoly::constant(1);
            return;
        }
        QLPoly g = gcd(num, den);
        if (g.c.size() > 1 || (g.c.size() == 1 && g.c[0] != 1)) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
        mpq_class lead = den.c.back();
        for (auto& x : num.c) x /= lead;
        for (auto& x : den.c) x /= lead;
    }
    static QLPoly divide_exact(const QLPoly& a, const QLPoly& b) {
        QLPoly r = a, q;
        q.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
        while (!r.is_zero() && r.c.size() >= b.c.size()) {
            mpq_class f = r.c.back() / b.c.back();
            std::size_t shift = r.c.size() - b.c.size();
            q.c[shift] = f;
            for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= f * b.c[i];
            r.trim();
        }
        q.trim();
        return q;
    }
    QLRat operator+(const QLRat& o) const { return of(num * o.den + o.num * den, den * o.den); }
    QLRat operator-(const QLRat& o) const { return of(num * o.den - o.num * den, den * o.den); }
    QLRat operator*(const QLRat& o) const { return of(num * o.num, den * o.den); }
    QLRat operator/(const QLRat& o) const {
        if (o.is_zero()) throw precondition_error("division by zero in Q(L)");
        return of(num * o.den, den * o.num);
    }
};

// MotiveClass (Laurent) -> element of Q(L): L^{-s} factors into the denominator.
QLRat to_qlrat(const MotiveClass& m) {
    if (m.is_zero()) return QLRat::zero();
    long low = std::min(0L, m.low_exponent());
    QLPoly num;
    num.c.assign(static_cast<std::size_t>(m.dim().value() - low) + 1, 0);
    for (const auto& [e, c] : m.coeffs()) num.c[static_cast<std::size_t>(e - low)] = mpq_class(c);
    QLPoly den;
    den.c.assign(static_cast<std::size_t>(-low) + 1, 0);
    den.c.back() = 1;
    return QLRat::of(std::move(num), std::move(den));
}

// Q(L) element -> rational-coefficient Laurent data when the denominator is a
// monomial (possibly scaled) after reduction.
std::optional<std::map<long, mpq_class>> to_laurent(const QLRat& r) {
    std::map<long, mpq_class> out;
    if (r.is_zero()) return out;
    std::size_t nonzero = 0, deg = 0;
    for (std::size_t i = 0; i < r.den.c.size(); ++i)
        if (r.den.c[i] != 0) {
            ++nonzero;
            deg = i;
        }
    if (nonzero != 1) return std::nullopt;
    mpq_class scale = r.den.c[deg];
    for (std::size_t i = 0; i < r.num.c.size(); ++i) {
        mpq_class q = r.num.c[i] / scale;
        if (q != 0) out[static_cast<long>(i) - static_cast<long>(deg)] = q;
    }
    return out;
}

}  // namespace

std::optional<MotiveRational> detect_rationality(const MotiveSeries& s, std::size_t max_den_degree) {
    std::size_t T = s.truncation();
    if (T + 1 < 2 * max_den_degree + 2)
        throw precondition_error("detect_rationality: truncation too small for requested degree");

    std::vector<QLRat> a;
    for (std::size_t n = 0; n <= T; ++n) a.push_back(to_qlrat(s.coeff(n)));

    for (std::size_t k = 0; k <= max_den_degree; ++k) {
        for (std::size_t nu = 0; nu + k + 1 <= T; ++nu) {
            if (T - nu < k + 1) continue;  // need at least k equations beyond nu
            // Solve sum_{j=0..k} d_j a_{n-j} = 0 for n = nu+1 .. T with d_0 = 1.
            std::size_t rows = T - nu;
            std::vector<std::vector<QLRat>> M(rows, std::vector<QLRat>(k + 1, QLRat::zero()));
            for (std::size_t r = 0; r < rows; ++r) {
                std::size_t n = nu + 1 + r;
                for (std::size_t j = 0; j <= k; ++j)
                    M[r][j] = n >= j ? a[n - j] : QLRat::zero();
            }
            // Gaussian elimination for d_1..d_k using rhs = -a_n.
            std::vector<std::vector<QLRat>> A(rows, std::vector<QLRat>(k, QLRat::zero()));
            std::vector<QLRat> rhs(rows, QLRat::zero());
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t j = 1; j <= k; ++j) A[r][j - 1] = M[r][j];
                rhs[r] = QLRat::zero() - M[r][0];
            }
            std::vector<QLRat> d(k, QLRat::zero());
            bool solvable = true;
            std::size_t rank_row = 0;
            std::vector<long> pivot_of_col(k, -1);
            for (std::size_t col = 0; col < k && rank_row < rows; ++col) {
                std::size_t piv = rank_row;
                while (piv < rows && A[piv][col].is_zero()) ++piv;
                if (piv == rows) continue;
                std::swap(A[piv], A[rank_row]);
                std::swap(rhs[piv], rhs[rank_row]);
                QLRat inv = QLRat::of(QLPoly::constant(1), QLPoly::constant(1)) / A[rank_row][col];
                for (std::size_t c2 = col; c2 < k; ++c2) A[rank_row][c2] = A[rank_row][c2] * inv;
                rhs[rank_row] = rhs[rank_row] * inv;
                for (std::size_t r2 = 0; r2 < rows; ++r2) {
                    if (r2 == rank_row || A[r2][col].is_zero()) continue;
                    QLRat f = A[r2][col];
                    for (std::size_t c2 = col; c2 < k; ++c2)
                        A[r2][c2] = A[r2][c2] - f * A[rank_row][c2];
                    rhs[r2] = rhs[r2] - f * rhs[rank_row];
                }
                pivot_of_col[col] = static_cast<long>(rank_row);
                ++rank_row;
            }
            // Check consistency; free variables default to zero.
            for (std::size_t r2 = rank_row; r2 < rows; ++r2)
                if (!rhs[r2].is_zero()) {
                    solvable = false;
                    break;
                }
            if (!solvable) continue;
            for (std::size_t col = 0; col < k; ++col)
                if (pivot_of_col[col] >= 0) d[col] = rhs[pivot_of_col[col]];

            // Assemble denominator and numerator in Q(L), then lift to Laurent.
            std::vector<QLRat> den(k + 1, QLRat::zero());
            den[0] = QLRat::of(QLPoly::constant(1), QLPoly::constant(1));
            for (std::size_t j = 1; j <= k; ++j) den[j] = d[j - 1];
            std::vector<QLRat> num(nu + 1, QLRat::zero());
            for (std::size_t n = 0; n <= nu; ++n) {
                QLRat acc = QLRat::zero();
                for (std::size_t j = 0; j <= std::min(n, k); ++j) acc = acc + den[j] * a[n - j];
                num[n] = acc;
            }
            // Clear denominators: polynomial common multiple first, then one
            // global integer scaling to reach integer Laurent coefficients.
            QLPoly common = QLPoly::constant(1);
            for (const auto& x : den)
                if (!x.is_zero()) common = QLRat::divide_exact(common * x.den, gcd(common, x.den));
            for (const auto& x : num)
                if (!x.is_zero()) common = QLRat::divide_exact(common * x.den, gcd(common, x.den));
            std::vector<std::map<long, mpq_class>> den_l, num_l;
            bool liftable = true;
            auto lift = [&](const QLRat& x) {
                return to_laurent(x * QLRat::of(common, QLPoly::constant(1)));
            };
            for (const auto& x : den) {
                auto c = lift(x);
                if (!c) {
                    liftable = false;
                    break;
                }
                den_l.push_back(*c);
            }
            if (liftable)
                for (const auto& x : num) {
                    auto c = lift(x);
                    if (!c) {
                        liftable = false;
                        break;
                    }
                    num_l.push_back(*c);
                }
            if (!liftable) continue;
            mpz_class denom_lcm(1);
            for (const auto& m : den_l)
                for (const auto& [e, q] : m)
                    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            for (const auto& m : num_l)
                for (const auto& [e, q] : m)
                    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            auto integerize = [&](const std::map<long, mpq_class>& m) {
                MotiveClass c;
                for (const auto& [e, q] : m) {
                    mpq_class scaled = q * mpq_class(denom_lcm);
                    c = c + MotiveClass::L_power(e, scaled.get_num());
                }
                return c;
            };
            MotiveRational out;
            for (const auto& m : den_l) out.den.push_back(integerize(m));
            for (const auto& m : num_l) out.num.push_back(integerize(m));
            while (!out.num.empty() && out.num.back().is_zero()) out.num.pop_back();
            while (!out.den.empty() && out.den.back().is_zero()) out.den.pop_back();
            if (out.den.empty()) continue;
            if (!out.den[0].as_unit()) continue;
            // Final verification: re-expansion reproduces the series.
            MotiveSeries check = expand_rational(out, T);
            bool match = true;
            for (std::size_t n = 0; n <= T; ++n)
                if (check.coeff(n) != s.coeff(n)) {
                    match = false;
                    break;
                }
            if (match) return out;
        }
    }
    return std::nullopt;
}

}  // namespace arcmot
