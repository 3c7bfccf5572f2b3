#include "arcmot/arcspace.hpp"

#include <algorithm>

namespace arcmot {

namespace {

// Elements of (grid ring) tensor (fat-point quotient): coefficient vector
// indexed by the standard-monomial basis.
using QElem = std::vector<Polynomial>;

struct QuotientContext {
    RingPtr grid;
    std::size_t ell;
    // product of basis monomials u, v expanded over the basis: list of
    // (basis index, field coefficient)
    std::vector<std::vector<std::vector<std::pair<std::size_t, mpq_class>>>> table;

    QElem zero() const { return QElem(ell, Polynomial::zero(grid)); }

    QElem mul(const QElem& a, const QElem& b) const {
        QElem r = zero();
        for (std::size_t u = 0; u < ell; ++u) {
            if (a[u].is_zero()) continue;
            for (std::size_t v = 0; v < ell; ++v) {
                if (b[v].is_zero()) continue;
                const auto& exp = table[u][v];
                if (exp.empty()) continue;
                Polynomial prod = a[u] * b[v];
                for (const auto& [k, c] : exp) r[k] = r[k] + prod.mul_scalar(c);
            }
        }
        return r;
    }
};

std::string ideal_brief(const Ideal& I) {
    std::string s = "(";
    for (std::size_t i = 0; i < I.gens().size(); ++i) {
        if (i) s += ", ";
        s += I.gens()[i].to_string();
    }
    return s + ")";
}

}  // namespace

ArcPresentation arc_space(const AffineScheme& X, const FatPoint& fat, const ArcOptions& opts) {
    if (X.ring->field() != fat.ring()->field())
        throw precondition_error("arc_space: source and fat point over different fields");
    const RingPtr& src_ring = X.ring;
    const RingPtr& fat_ring = fat.ring();
    const auto& basis = fat.basis();
    const std::size_t ell = fat.length();
    const std::size_t nsrc = src_ring->nvars();

    // Grid ring a_<i>_<j>, source-major.
    std::vector<std::string> grid_names;
    std::vector<std::vector<std::string>> grid(nsrc);
    for (std::size_t i = 0; i < nsrc; ++i) {
        for (std::size_t j = 0; j < ell; ++j) {
            std::string name = "a_" + std::to_string(i) + "_" + std::to_string(j);
            grid[i].push_back(name);
            grid_names.push_back(name);
        }
    }
    RingPtr grid_ring = PolyRing::make(src_ring->field(), grid_names, src_ring->order());

    // Basis multiplication table via normal forms against the fat point.
    QuotientContext ctx;
    ctx.grid = grid_ring;
    ctx.ell = ell;
    ctx.table.assign(ell, std::vector<std::vector<std::pair<std::size_t, mpq_class>>>(ell));
    std::map<std::vector<unsigned>, std::size_t> basis_index;
    for (std::size_t j = 0; j < ell; ++j) basis_index[basis[j].exponents()] = j;
    for (std::size_t u = 0; u < ell; ++u) {
        for (std::size_t v = u; v < ell; ++v) {
            Polynomial prod = Polynomial::from_monomial(fat_ring, basis[u] * basis[v], 1);
            Polynomial nf = normal_form(prod, fat.gb());
            std::vector<std::pair<std::size_t, mpq_class>> expansion;
            for (const auto& t : nf.terms()) {
                auto it = basis_index.find(t.mon.exponents());
                if (it == basis_index.end())
                    throw precondition_error("arc_space: normal form left the standard basis");
                expansion.emplace_back(it->second, t.coeff);
            }
            ctx.table[u][v] = expansion;
            ctx.table[v][u] = std::move(expansion);
        }
    }

    // General arcs: alpha_i has the grid variable a_<i>_<j> at basis slot j.
    std::vector<QElem> alpha(nsrc, ctx.zero());
    for (std::size_t i = 0; i < nsrc; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            alpha[i][j] = Polynomial::variable(grid_ring, i * ell + j);

    // Substitute into a deterministic generating set of the source ideal.
    GroebnerBasis src_gb = groebner(X.ideal, opts.groebner);
    const std::size_t one_idx = 0;  // basis is ascending, so basis[0] = 1
    if (ell == 0 || !basis[0].is_one())
        throw precondition_error("arc_space: basis does not start at 1");

    std::vector<std::vector<QElem>> powers(nsrc);  // powers[i][e] = alpha_i^e
    auto alpha_power = [&](std::size_t i, unsigned e) -> const QElem& {
        auto& pw = powers[i];
        if (pw.empty()) {
            QElem unit = ctx.zero();
            unit[one_idx] = Polynomial::constant(grid_ring, 1);
            pw.push_back(unit);
        }
        while (pw.size() <= e) pw.push_back(ctx.mul(pw.back(), alpha[i]));
        return pw[e];
    };

    std::vector<Polynomial> raw;
    for (const auto& g : src_gb.basis()) {
        QElem acc = ctx.zero();
        for (const auto& t : g.terms()) {
            QElem term = ctx.zero();
            term[one_idx] = Polynomial::constant(grid_ring, t.coeff);
            for (std::size_t i = 0; i < nsrc; ++i) {
                if (t.mon[i] == 0) continue;
                term = ctx.mul(term, alpha_power(i, t.mon[i]));
            }
            for (std::size_t j = 0; j < ell; ++j) acc[j] = acc[j] + term[j];
        }
        for (std::size_t j = 0; j < ell; ++j)
            if (!acc[j].is_zero()) raw.push_back(acc[j].primitive_integer_form());
    }

    ArcPresentation out;
    out.grid_ring = grid_ring;
    out.grid = grid;
    out.generators = opts.interreduce ? interreduce_basis(std::move(raw)) : std::move(raw);
    out.source_ideal = X.ideal;
    out.fat_ideal = fat.ideal();
    out.provenance.source = ideal_brief(X.ideal);
    out.provenance.fat = ideal_brief(fat.ideal());
    for (std::size_t j = 0; j < ell; ++j)
        out.provenance.basis.push_back(fat_ring->monomial_string(basis[j]));
    // Flat bookkeeping names follow the convention "ambient variables first":
    // offset = #source vars + #fat vars, then a_<i>_<j> -> a(offset + j*nsrc + i).
    std::size_t offset = nsrc + fat_ring->nvars();
    for (std::size_t i = 0; i < nsrc; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            out.provenance.flat_names[grid[i][j]] = "a" + std::to_string(offset + j * nsrc + i);
    return out;
}

ArcPresentation auto_arc(const AffineScheme& X, const std::vector<mpq_class>& point, unsigned n,
                         const ArcOptions& opts) {
    FatPoint J = jet(X, point, n, opts.groebner);
    AffineScheme jet_scheme{J.ring(), J.ideal()};
    return arc_space(jet_scheme, J, opts);
}

AffineScheme as_scheme(const ArcPresentation& arc) {
    return AffineScheme{arc.grid_ring, arc.ideal()};
}

}  // namespace arcmot
