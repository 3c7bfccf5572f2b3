#include "arcmot/renaming.hpp"

#include <algorithm>

namespace arcmot {

namespace {

struct SearchState {
    const RingPtr& ring_I;
    const RingPtr& ring_J;
    const std::vector<Polynomial>& gens_I;
    const std::vector<Polynomial>& gens_J;
    const GroebnerBasis& gb_J;
    const std::vector<int>& occ_I;   // occurring var indices in I's ring
    const std::vector<int>& occ_J;   // occurring var indices in J's ring
    std::vector<int> assign;         // occ_I position -> occ_J position, -1 unset
    std::vector<char> used;          // occ_J position used
    std::vector<std::vector<std::size_t>> gens_touching;  // occ_I position -> generator ids
    GroebnerOptions gb_opts;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
};

// Map a generator of I through the partial assignment; requires all its
// variables assigned.
Polynomial apply_assignment(const SearchState& st, const Polynomial& g) {
    std::map<std::string, std::string> names;
    for (std::size_t k = 0; k < st.occ_I.size(); ++k) {
        if (st.assign[k] < 0) continue;
        names[st.ring_I->vars()[st.occ_I[k]]] = st.ring_J->vars()[st.occ_J[st.assign[k]]];
    }
    return g.rename_into(st.ring_J, names);
}

bool generator_fully_assigned(const SearchState& st, std::size_t gen_id,
                              const std::vector<std::vector<std::size_t>>& vars_of_gen) {
    for (std::size_t k : vars_of_gen[gen_id])
        if (st.assign[k] < 0) return false;
    return true;
}

bool search(SearchState& st, const std::vector<std::vector<std::size_t>>& vars_of_gen,
            std::size_t depth) {
    if (++st.nodes > st.max_nodes) throw budget_error("renaming search budget exceeded");
    if (depth == st.occ_I.size()) {
        // Forward inclusion pi(I) <= J is established by the incremental
        // membership pruning; confirm the reverse inclusion before accepting.
        std::vector<Polynomial> mapped;
        for (const auto& g : st.gens_I) mapped.push_back(apply_assignment(st, g));
        GroebnerBasis gb_piI = groebner(Ideal(st.ring_J, mapped), st.gb_opts);
        for (const auto& g : st.gens_J)
            if (!ideal_member(g, gb_piI)) return false;
        return true;
    }

    // Pick the unassigned variable with the most almost-complete generators;
    // ties broken by ring index for determinism.
    std::size_t pick = st.occ_I.size();
    long best_score = -1;
    for (std::size_t k = 0; k < st.occ_I.size(); ++k) {
        if (st.assign[k] >= 0) continue;
        long score = 0;
        for (std::size_t gid : st.gens_touching[k]) {
            long missing = 0;
            for (std::size_t v : vars_of_gen[gid])
                if (st.assign[v] < 0) ++missing;
            score += 1000 / (missing + 1);
        }
        if (score > best_score) {
            best_score = score;
            pick = k;
        }
    }

    for (std::size_t c = 0; c < st.occ_J.size(); ++c) {
        if (st.used[c]) continue;
        st.assign[pick] = static_cast<int>(c);
        st.used[c] = 1;
        bool ok = true;
        for (std::size_t gid : st.gens_touching[pick]) {
            if (!generator_fully_assigned(st, gid, vars_of_gen)) continue;
            Polynomial mapped = apply_assignment(st, st.gens_I[gid]);
            if (!ideal_member(mapped, st.gb_J)) {
                ok = false;
                break;
            }
        }
        if (ok && search(st, vars_of_gen, depth + 1)) return true;
        st.assign[pick] = -1;
        st.used[c] = 0;
    }
    return false;
}

}  // namespace

bool renaming_matches(const Ideal& I, const Ideal& J, const std::map<std::string, std::string>& pi,
                      const GroebnerOptions& opts) {
    GroebnerBasis gb_J = groebner(J, opts);
    std::vector<Polynomial> mapped;
    for (const auto& g : I.gens()) {
        Polynomial m = g.rename_into(J.ring(), pi);
        if (!ideal_member(m, gb_J)) return false;
        mapped.push_back(std::move(m));
    }
    GroebnerBasis gb_piI = groebner(Ideal(J.ring(), mapped), opts);
    for (const auto& g : J.gens())
        if (!ideal_member(g, gb_piI)) return false;
    return true;
}

std::optional<std::map<std::string, std::string>> equal_up_to_renaming(
    const Ideal& I, const Ideal& J, const RenamingOptions& opts) {
    std::vector<int> occ_I = I.occurring_vars();
    std::vector<int> occ_J = J.occurring_vars();
    if (occ_I.size() != occ_J.size())
        throw precondition_error("equal_up_to_renaming: occurring-variable counts differ (" +
                                 std::to_string(occ_I.size()) + " vs " + std::to_string(occ_J.size()) + ")");
    if (occ_I.size() > opts.max_occurring_vars)
        throw budget_error("equal_up_to_renaming: " + std::to_string(occ_I.size()) +
                           " occurring variables exceeds cap " + std::to_string(opts.max_occurring_vars));
    if (occ_I.empty()) {
        // Both ideals are generated by constants (or empty).
        bool zi = I.is_zero_ideal(), zj = J.is_zero_ideal();
        if (zi == zj) return std::map<std::string, std::string>{};
        return std::nullopt;
    }

    std::vector<Polynomial> gens_I = interreduce_basis(I.gens());
    std::vector<Polynomial> gens_J = J.gens();
    GroebnerBasis gb_J = groebner(J, opts.groebner);

    std::vector<std::vector<std::size_t>> vars_of_gen(gens_I.size());
    std::vector<std::vector<std::size_t>> gens_touching(occ_I.size());
    std::map<int, std::size_t> pos_of_var;
    for (std::size_t k = 0; k < occ_I.size(); ++k) pos_of_var[occ_I[k]] = k;
    for (std::size_t g = 0; g < gens_I.size(); ++g) {
        for (int v : gens_I[g].occurring_vars()) {
            std::size_t k = pos_of_var[v];
            vars_of_gen[g].push_back(k);
            gens_touching[k].push_back(g);
        }
    }

    SearchState st{I.ring(), J.ring(), gens_I, gens_J, gb_J, occ_I, occ_J, {}, {}, gens_touching,
                   opts.groebner};
    st.assign.assign(occ_I.size(), -1);
    st.used.assign(occ_J.size(), 0);
    st.max_nodes = opts.max_nodes;

    if (!search(st, vars_of_gen, 0)) return std::nullopt;
    std::map<std::string, std::string> pi;
    for (std::size_t k = 0; k < occ_I.size(); ++k)
        pi[I.ring()->vars()[occ_I[k]]] = J.ring()->vars()[occ_J[st.assign[k]]];
    return pi;
}

}  // namespace arcmot
