#include "arcmot/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arcmot {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(ring_, g.ring(), "ideal generator");
        gens_.push_back(std::move(g));
    }
}

std::vector<int> Ideal::occurring_vars() const {
    std::vector<char> seen(ring_ ? ring_->nvars() : 0, 0);
    for (const auto& g : gens_)
        for (int v : g.occurring_vars()) seen[v] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool Ideal::contains_one() const { return groebner(*this).contains_one(); }

namespace {

struct StepBudget {
    std::uint64_t left;
    void spend(std::uint64_t n = 1) {
        if (n > left) throw budget_error("Groebner step budget exceeded");
        left -= n;
    }
};

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       StepBudget* budget) {
    if (reducers.empty() || p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    const auto& field = ring->field();
    Polynomial rest = p;        // still to be examined
    std::vector<Term> done;     // confirmed irreducible terms (descending)
    while (!rest.is_zero()) {
        if (budget) budget->spend();
        const Term& lt = rest.leading_term();
        bool reduced = false;
        for (const auto& g : reducers) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.mon)) {
                Monomial q = lt.mon.quotient_by(g.leading_monomial());
                mpq_class c = field.div(lt.coeff, g.leading_coeff());
                rest = rest - g.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.push_back(lt);
            rest = rest - Polynomial::from_monomial(ring, lt.mon, lt.coeff);
        }
    }
    Polynomial out(ring);
    return Polynomial::from_terms(ring, std::move(done));
}

// Buchberger with the Gebauer-Moeller pair update. Deterministic: generators
// and new basis elements are appended in a fixed order, pairs are processed
// by (lcm degree, lcm monomial, indices).
std::vector<Polynomial> buchberger(const Ideal& ideal, const GroebnerOptions& opts) {
    const RingPtr& ring = ideal.ring();
    StepBudget budget{opts.max_steps};

    std::vector<Polynomial> basis;
    for (const auto& g : ideal.gens()) basis.push_back(g.monic());
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [](const Polynomial& a, const Polynomial& b) { return a == b; }),
                basis.end());

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ring->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    auto add_pairs_for = [&](std::size_t t) {
        const Monomial& lt = basis[t].leading_monomial();
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            fresh.push_back({i, t, basis[i].leading_monomial().lcm(lt)});
        }
        // Gebauer-Moeller: drop old pairs whose lcm is a proper multiple of
        // lcm(i,t) or lcm(j,t).
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            const Monomial& lij = pr.lcm;
            Monomial lit = basis[pr.i].leading_monomial().lcm(lt);
            Monomial ljt = basis[pr.j].leading_monomial().lcm(lt);
            if (lt.divides(lij) && lij != lit && lij != ljt) continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);
        // Among the fresh pairs keep one representative per lcm; drop pairs
        // whose lcm is a proper multiple of another fresh lcm, and pairs with
        // coprime leading terms (Buchberger's first criterion).
        std::vector<Pair> chosen;
        for (auto& f : fresh) {
            bool redundant = false;
            for (auto& g : fresh) {
                if (&f == &g) continue;
                if (g.lcm != f.lcm && g.lcm.divides(f.lcm)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) continue;
            bool dup = false;
            for (auto& c : chosen)
                if (c.lcm == f.lcm) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            if (basis[f.i].leading_monomial().coprime(lt)) continue;
            chosen.push_back(f);
        }
        for (auto& c : chosen) pairs.push_back(std::move(c));
        std::sort(pairs.begin(), pairs.end(), pair_less);
    };

    for (std::size_t t = 1; t < basis.size(); ++t) add_pairs_for(t);
    std::sort(pairs.begin(), pairs.end(), pair_less);

    while (!pairs.empty()) {
        Pair pr = pairs.front();
        pairs.erase(pairs.begin());
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        if (f.is_zero() || g.is_zero()) continue;
        budget.spend();
        Monomial qf = pr.lcm.quotient_by(f.leading_monomial());
        Monomial qg = pr.lcm.quotient_by(g.leading_monomial());
        Polynomial s = f.mul_term(qf, 1) - g.mul_term(qg, 1);
        Polynomial r = reduce_full(s, basis, &budget);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            add_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's, then fully interreduce and sort ascending.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i], others, &budget);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts) {
    if (!ideal.ring()) throw precondition_error("groebner: ideal without ring");
    return GroebnerBasis(ideal, buchberger(ideal, opts));
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& reducers) {
    for (const auto& g : reducers) require_same_ring(p.ring(), g.ring(), "normal_form");
    return reduce_full(p, reducers, nullptr);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_ring(p.ring(), gb.ring(), "normal_form");
    return reduce_full(p, gb.basis(), nullptr);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    const RingPtr& ring = gb.ring();
    std::size_t n = ring->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gb.basis()) lts.push_back(g.leading_monomial());
    if (gb.contains_one()) return {};

    // Finite-dimensionality: every variable must have a pure power among the
    // leading terms.
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& m : lts) {
            if (m[v] > 0 && m.support_size() == 1) {
                found = true;
                break;
            }
        }
        if (!found)
            throw precondition_error("standard_monomials: quotient is infinite-dimensional (variable '" +
                                     ring->vars()[v] + "' has no pure-power leading term)");
    }

    auto reducible = [&](const Monomial& m) {
        for (const auto& lt : lts)
            if (lt.divides(m)) return true;
        return false;
    };

    // Box enumeration bounded by the pure powers.
    std::vector<unsigned> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& m : lts)
            if (m[v] > 0 && m.support_size() == 1) {
                bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
            }
    }
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    for (;;) {
        Monomial m{std::vector<unsigned>(e)};
        if (!reducible(m)) out.push_back(m);
        std::size_t k = 0;
        while (k < n) {
            if (e[k] + 1 < bound[k]) {
                ++e[k];
                break;
            }
            e[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
    return out;
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
    if (n == 0) throw precondition_error("ideal_power: exponent must be >= 1");
    const auto& gens = ideal.gens();
    std::vector<Polynomial> out;
    // All multisets of size n over the generators.
    std::vector<std::size_t> idx(n, 0);
    if (gens.empty()) return Ideal(ideal.ring(), {});
    for (;;) {
        Polynomial p = gens[idx[0]];
        for (unsigned k = 1; k < n; ++k) p = p * gens[idx[k]];
        out.push_back(p);
        // next non-decreasing index tuple
        int k = static_cast<int>(n) - 1;
        while (k >= 0 && idx[k] == gens.size() - 1) --k;
        if (k < 0) break;
        std::size_t v = idx[k] + 1;
        for (std::size_t j = k; j < n; ++j) idx[j] = v;
    }
    return Ideal(ideal.ring(), std::move(out));
}

std::vector<Polynomial> interreduce_basis(std::vector<Polynomial> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
    if (gens.empty()) return gens;
    const RingPtr& ring = gens.front().ring();
    auto sort_key = [&](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        int c = ring->compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.term_count() < b.term_count();
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(gens.begin(), gens.end(), sort_key);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            Polynomial r = normal_form(gens[i], others);
            if (!r.is_zero()) r = r.primitive_integer_form();
            if (r != gens[i]) {
                changed = true;
                if (r.is_zero()) {
                    gens.erase(gens.begin() + static_cast<long>(i));
                    --i;
                } else {
                    gens[i] = r;
                }
            }
        }
    }
    std::sort(gens.begin(), gens.end(), sort_key);
    return gens;
}

int dimension(const Ideal& ideal, const DimensionOptions& opts) {
    const RingPtr& ring = ideal.ring();
    GroebnerBasis gb = groebner(ideal, opts.groebner);
    if (gb.contains_one()) return -1;
    std::size_t n = ring->nvars();
    if (gb.basis().empty()) return static_cast<int>(n);

    // dim R/I = dim R/LT(I) = size of the largest subset S of variables such
    // that no leading-term support is contained in S.
    if (n > opts.max_subset_vars)
        throw budget_error("dimension: too many variables for subset search (" + std::to_string(n) + ")");
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb.basis()) {
        std::uint32_t mask = 0;
        const Monomial& lt = g.leading_monomial();
        for (std::size_t v = 0; v < n; ++v)
            if (lt[v] > 0) mask |= (1u << v);
        supports.push_back(mask);
    }
    int best = 0;
    std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    for (std::uint32_t S = 0; S <= full; ++S) {
        int pc = __builtin_popcount(S);
        if (pc <= best) continue;
        bool independent = true;
        for (std::uint32_t m : supports)
            if ((m & S) == m) {
                independent = false;
                break;
            }
        if (independent) best = pc;
    }
    return best;
}

}  // namespace arcmot
