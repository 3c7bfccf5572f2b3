#include "arcmot/reduction.hpp"

#include <algorithm>
#include <functional>

namespace arcmot {

namespace {

// v -> image, applied to one polynomial. Kills are images of zero.
Polynomial substitute_var(const Polynomial& p, std::size_t var, const Polynomial& image) {
    if (!p.contains_var(var)) return p;
    const RingPtr& ring = p.ring();
    std::map<std::string, Polynomial> images;
    images[ring->vars()[var]] = image;
    for (int v : p.occurring_vars())
        if (static_cast<std::size_t>(v) != var)
            images[ring->vars()[v]] = Polynomial::variable(ring, static_cast<std::size_t>(v));
    return p.substitute(ring, images);
}

std::size_t occurring_count(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return 0;
    std::vector<char> seen(gens.front().ring()->nvars(), 0);
    for (const auto& g : gens)
        for (int v : g.occurring_vars()) seen[v] = 1;
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
}

}  // namespace

ReducedPresentation heuristic_reduce(const Ideal& ideal, const ReductionOptions& opts) {
    const RingPtr& ring = ideal.ring();
    ReducedPresentation out;
    out.ring = ring;
    out.all_vars = ring->vars();

    std::vector<Polynomial> gens = ideal.gens();
    std::uint64_t passes = 0;
    bool changed = true;
    while (changed) {
        if (++passes > opts.max_passes) throw budget_error("heuristic_reduce: pass budget exceeded");
        changed = false;
        gens = interreduce_basis(std::move(gens));

        // Rule: single-term generators. A pure power kills its variable; a
        // mixed monomial is replaced by its squarefree part.
        std::vector<std::size_t> kills;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!gens[i].is_monomial_multiple()) continue;
            const Monomial& m = gens[i].leading_monomial();
            if (m.support_size() == 1) {
                kills.push_back(i);
            } else if (m != m.squarefree_part()) {
                gens[i] = Polynomial::from_monomial(ring, m.squarefree_part(), 1);
                changed = true;
            }
        }
        if (!kills.empty()) {
            std::set<std::size_t> victims;
            for (std::size_t i : kills) {
                const Monomial& m = gens[i].leading_monomial();
                for (std::size_t v = 0; v < ring->nvars(); ++v)
                    if (m[v] > 0) victims.insert(v);
            }
            Polynomial zero = Polynomial::zero(ring);
            for (std::size_t v : victims) {
                out.killed.insert(ring->vars()[v]);
                for (auto& g : gens) g = substitute_var(g, v, zero);
            }
            changed = true;
            continue;
        }

        // Rule: linear elimination v - g with v absent from g, only when it
        // strictly decreases the occurring-variable count. Variables are
        // scanned in ring order for determinism.
        std::size_t occ_before = occurring_count(gens);
        bool eliminated = false;
        for (std::size_t v = 0; v < ring->nvars() && !eliminated; ++v) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const Polynomial& g = gens[i];
                auto cv = g.coeff_of(ring->var_monomial(v));
                if (!cv) continue;
                Polynomial rest = g - Polynomial::from_monomial(ring, ring->var_monomial(v), *cv);
                if (rest.contains_var(v)) continue;
                Polynomial image = rest.mul_scalar(ring->field().div(mpq_class(-1), *cv));
                std::vector<Polynomial> trial;
                trial.reserve(gens.size());
                for (std::size_t j = 0; j < gens.size(); ++j) {
                    if (j == i) continue;
                    trial.push_back(substitute_var(gens[j], v, image));
                }
                if (occurring_count(trial) < occ_before) {
                    out.substitutions.emplace(ring->vars()[v], image);
                    gens = std::move(trial);
                    eliminated = true;
                    changed = true;
                    break;
                }
            }
        }
    }

    out.residual = std::move(gens);
    std::set<std::string> bound(out.killed.begin(), out.killed.end());
    for (const auto& [v, img] : out.substitutions) bound.insert(v);
    std::vector<char> occurs(ring->nvars(), 0);
    for (const auto& g : out.residual)
        for (int v : g.occurring_vars()) occurs[v] = 1;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        const std::string& name = ring->vars()[v];
        if (!occurs[v] && !bound.count(name)) out.free_vars.push_back(name);
    }

    bool all_squarefree_monomials = true;
    for (const auto& g : out.residual) {
        if (!g.is_monomial_multiple() || g.leading_monomial() != g.leading_monomial().squarefree_part()) {
            all_squarefree_monomials = false;
            break;
        }
    }
    out.flag = (out.residual.empty() || all_squarefree_monomials) ? ReductionFlag::RadicalCertified
                                                                  : ReductionFlag::HeuristicFixpoint;
    return out;
}

ReducedPresentation heuristic_reduce(const ArcPresentation& arc, const ReductionOptions& opts) {
    return heuristic_reduce(arc.ideal(), opts);
}

Decomposition decompose(const ReducedPresentation& red) {
    const RingPtr& ring = red.ring;
    Decomposition out;
    out.affine_rank = red.free_vars.size();
    if (red.residual.empty()) return out;

    // Union-find over occurring variables; generators connect their supports.
    std::vector<int> parent(ring->nvars());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : red.residual) {
        auto occ = g.occurring_vars();
        for (std::size_t k = 1; k < occ.size(); ++k) parent[find(occ[k])] = find(occ[0]);
    }
    std::map<int, std::vector<int>> comps;
    std::vector<char> occurs(ring->nvars(), 0);
    for (const auto& g : red.residual)
        for (int v : g.occurring_vars()) occurs[v] = 1;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
        if (occurs[v]) comps[find(static_cast<int>(v))].push_back(static_cast<int>(v));

    for (auto& [root, vars] : comps) {
        std::vector<std::string> names;
        for (int v : vars) names.push_back(ring->vars()[v]);
        RingPtr sub = PolyRing::make(ring->field(), names, ring->order());
        std::vector<Polynomial> gens;
        for (const auto& g : red.residual) {
            auto occ = g.occurring_vars();
            if (occ.empty()) continue;
            if (find(occ[0]) == root) gens.push_back(g.rename_into(sub));
        }
        out.factors.emplace_back(sub, std::move(gens));
    }
    return out;
}

std::optional<std::size_t> is_affine_space(const ReducedPresentation& red) {
    if (!red.residual.empty()) return std::nullopt;
    return red.free_vars.size();
}

}  // namespace arcmot
