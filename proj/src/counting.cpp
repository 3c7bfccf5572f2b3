#include "arcmot/counting.hpp"

#include <algorithm>

namespace arcmot {

namespace {

struct CompiledTerm {
    unsigned long long coeff;           // in [1, p)
    std::vector<std::pair<int, unsigned>> factors;  // (slot, exponent)
};

struct CompiledPoly {
    std::vector<CompiledTerm> terms;
};

CompiledPoly compile_poly(const Polynomial& g, const std::vector<int>& slot_of_var,
                          unsigned long p) {
    CompiledPoly out;
    for (const auto& t : g.terms()) {
        CompiledTerm ct;
        mpz_class num = t.coeff.get_num() % static_cast<long>(p);
        if (num < 0) num += static_cast<long>(p);
        ct.coeff = num.get_ui();
        if (ct.coeff == 0) continue;
        for (std::size_t v = 0; v < t.mon.arity(); ++v)
            if (t.mon[v] > 0) ct.factors.emplace_back(slot_of_var[v], t.mon[v]);
        out.terms.push_back(std::move(ct));
    }
    return out;
}

}  // namespace

Ideal reduce_mod_p(const Ideal& ideal_over_q, unsigned long p) {
    if (!ideal_over_q.ring() || ideal_over_q.ring()->field().is_prime_field())
        throw precondition_error("reduce_mod_p: expected an ideal over the rationals");
    RingPtr fp_ring = PolyRing::make(CoefficientField::prime(p), ideal_over_q.ring()->vars(),
                                     ideal_over_q.ring()->order());
    std::vector<Polynomial> gens;
    for (const auto& g : ideal_over_q.gens()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            if (mpz_divisible_ui_p(t.coeff.get_den().get_mpz_t(), p))
                throw precondition_error("bad reduction: denominator divisible by " + std::to_string(p));
            terms.push_back({t.mon, t.coeff});
        }
        gens.push_back(Polynomial::from_terms(fp_ring, std::move(terms)));
    }
    return Ideal(fp_ring, std::move(gens));
}

mpz_class count_points(const Ideal& ideal, const CountOptions& opts) {
    const RingPtr& ring = ideal.ring();
    if (!ring->field().is_prime_field())
        throw precondition_error("count_points: ideal must live over a prime field");
    unsigned long p = ring->field().characteristic();

    std::vector<int> occ = ideal.occurring_vars();
    std::size_t m = occ.size();
    std::size_t free_count = ring->nvars() - m;

    // Budget check on the brute-force part.
    unsigned long long total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (total > opts.budget / p + 1)
            throw budget_error("count_points: p^" + std::to_string(m) + " exceeds budget (" +
                               std::to_string(m) + " occurring variables)");
        total *= p;
    }
    if (total > opts.budget)
        throw budget_error("count_points: p^" + std::to_string(m) + " exceeds budget");

    std::vector<int> slot_of_var(ring->nvars(), -1);
    for (std::size_t i = 0; i < m; ++i) slot_of_var[occ[i]] = static_cast<int>(i);
    std::vector<CompiledPoly> polys;
    for (const auto& g : ideal.gens()) polys.push_back(compile_poly(g, slot_of_var, p));

    // Power tables, refreshed per assignment, and an odometer sweep.
    std::vector<std::vector<unsigned long long>> pw(m);
    unsigned max_exp = 1;
    for (const auto& g : ideal.gens()) max_exp = std::max(max_exp, g.total_degree());
    for (auto& row : pw) row.assign(max_exp + 1, 1);

    std::vector<unsigned long long> x(m, 0);
    auto refresh = [&](std::size_t slot) {
        auto& row = pw[slot];
        row[0] = 1;
        for (unsigned e = 1; e <= max_exp; ++e) row[e] = (row[e - 1] * x[slot]) % p;
    };
    for (std::size_t i = 0; i < m; ++i) refresh(i);

    unsigned long long hits = 0;
    for (unsigned long long it = 0;; ++it) {
        bool vanish_all = true;
        for (const auto& cp : polys) {
            unsigned long long acc = 0;
            for (const auto& t : cp.terms) {
                unsigned long long v = t.coeff;
                for (const auto& [slot, e] : t.factors) v = (v * pw[slot][e]) % p;
                acc = (acc + v) % p;
            }
            if (acc != 0) {
                vanish_all = false;
                break;
            }
        }
        if (vanish_all) ++hits;
        // advance odometer
        std::size_t k = 0;
        while (k < m) {
            if (++x[k] < p) {
                refresh(k);
                break;
            }
            x[k] = 0;
            refresh(k);
            ++k;
        }
        if (k == m) break;
        if (m == 0) break;
    }

    mpz_class result(static_cast<unsigned long>(hits));
    mpz_class pp(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < free_count; ++i) result *= pp;
    return result;
}

MotiveClass interpolate_class(const Ideal& ideal_over_q, unsigned degree_bound,
                              const InterpolateOptions& opts) {
    // Collect d+2 admissible primes (d+1 interpolation nodes plus one check),
    // skipping excluded characteristics and bad-reduction primes.
    std::vector<unsigned long> primes;
    unsigned long candidate = opts.first_prime >= 2 ? opts.first_prime : 2;
    std::vector<mpz_class> counts;
    while (primes.size() < static_cast<std::size_t>(degree_bound) + 2) {
        while (!is_prime_u64(candidate) || opts.excluded_chars.count(candidate)) ++candidate;
        bool usable = true;
        mpz_class n;
        try {
            Ideal red = reduce_mod_p(ideal_over_q, candidate);
            n = count_points(red, opts.count);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Budget) throw;
            usable = false;  // bad reduction: skip this prime
        }
        if (usable) {
            primes.push_back(candidate);
            counts.push_back(n);
        }
        ++candidate;
    }

    // Lagrange interpolation through (p_i, N_i) for i = 0..d.
    std::size_t d = degree_bound;
    std::vector<mpq_class> poly(d + 1, 0);  // coefficients of L^0..L^d
    for (std::size_t i = 0; i <= d; ++i) {
        // basis_i(L) = prod_{j != i} (L - p_j) / (p_i - p_j)
        std::vector<mpq_class> basis{1};
        mpq_class denom(1);
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * static_cast<long>(primes[j]);
            }
            basis = std::move(next);
            denom *= mpq_class(static_cast<long>(primes[i]) - static_cast<long>(primes[j]));
        }
        mpq_class w = mpq_class(counts[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += basis[k] * w;
    }

    MotiveClass result;
    for (std::size_t k = 0; k <= d; ++k) {
        if (poly[k] == 0) continue;
        if (poly[k].get_den() != 1)
            throw verification_error("interpolate_class: interpolation is not integral; counting "
                                     "function is not a degree-" + std::to_string(d) +
                                     " polynomial in the field size");
        result = result + MotiveClass::L_power(static_cast<long>(k), poly[k].get_num());
    }

    // Held-out verification prime.
    unsigned long vp = primes.back();
    mpq_class predicted = result.evaluate_at_q(mpq_class(static_cast<long>(vp)));
    if (predicted != mpq_class(counts.back()))
        throw verification_error("interpolate_class: verification prime " + std::to_string(vp) +
                                 " mismatch (class is not polynomial of degree <= " +
                                 std::to_string(degree_bound) + ", or bad reduction)");
    return result;
}

}  // namespace arcmot
