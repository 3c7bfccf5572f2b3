#include "arcmot/fatpoint.hpp"

#include <set>

namespace arcmot {

FatPoint make_fat_point(const Ideal& ideal, const GroebnerOptions& opts) {
    FatPoint fp;
    fp.gb_ = groebner(ideal, opts);
    if (fp.gb_.contains_one()) throw precondition_error("fat point: ideal is the unit ideal");
    fp.basis_ = standard_monomials(fp.gb_);  // throws when infinite-dimensional
    const RingPtr& ring = ideal.ring();
    std::size_t ell = fp.basis_.size();
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Polynomial pw = Polynomial::variable(ring, v).pow(static_cast<unsigned>(ell));
        if (!normal_form(pw, fp.gb_).is_zero())
            throw precondition_error("fat point: variable '" + ring->vars()[v] +
                                     "' is not nilpotent (not local at the origin)");
    }
    return fp;
}

FatPoint jet(const AffineScheme& X, const std::vector<mpq_class>& point, unsigned n,
             const GroebnerOptions& opts) {
    if (n == 0) throw precondition_error("jet: order must be >= 1");
    const RingPtr& ring = X.ring;
    if (point.size() != ring->nvars()) throw precondition_error("jet: point arity mismatch");
    for (const auto& g : X.ideal.gens()) {
        if (ring->field().normalize(g.evaluate(point)) != 0)
            throw precondition_error("jet: point does not lie on the scheme");
    }
    // Translate the point to the origin: x_i -> x_i + p_i.
    std::map<std::string, Polynomial> shift;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        shift[ring->vars()[i]] =
            Polynomial::variable(ring, i) + Polynomial::constant(ring, point[i]);
    std::vector<Polynomial> gens;
    for (const auto& g : X.ideal.gens()) gens.push_back(g.substitute(ring, shift));
    // Maximal ideal power (x_1, ..., x_d)^n.
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    if (!vars.empty()) {
        Ideal mpow = ideal_power(Ideal(ring, vars), n);
        for (const auto& g : mpow.gens()) gens.push_back(g);
    }
    return make_fat_point(Ideal(ring, std::move(gens)), opts);
}

FatPoint product_fat_point(const FatPoint& a, const FatPoint& b, const GroebnerOptions& opts) {
    if (a.ring()->field() != b.ring()->field())
        throw precondition_error("product_fat_point: coefficient fields differ");
    std::vector<std::string> vars = a.ring()->vars();
    std::set<std::string> taken(vars.begin(), vars.end());
    std::map<std::string, std::string> rename_b;
    for (const auto& v : b.ring()->vars()) {
        std::string name = v;
        int k = 2;
        while (taken.count(name)) name = v + "_" + std::to_string(k++);
        rename_b[v] = name;
        taken.insert(name);
        vars.push_back(name);
    }
    RingPtr ring = PolyRing::make(a.ring()->field(), vars, a.ring()->order());
    std::vector<Polynomial> gens;
    for (const auto& g : a.ideal().gens()) gens.push_back(g.rename_into(ring));
    for (const auto& g : b.ideal().gens()) gens.push_back(g.rename_into(ring, rename_b));
    return make_fat_point(Ideal(ring, std::move(gens)), opts);
}

FatPoint linear_jet(const CoefficientField& field, unsigned n, const std::string& var,
                    MonomialOrder order) {
    if (n == 0) throw precondition_error("linear_jet: order must be >= 1");
    RingPtr ring = PolyRing::make(field, {var}, order);
    Polynomial tn = Polynomial::variable(ring, 0).pow(n);
    return make_fat_point(Ideal(ring, {tn}));
}

}  // namespace arcmot
