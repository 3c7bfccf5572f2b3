#include <doctest.h>

#include <set>

#include "arcmot/arcspace.hpp"
#include "arcmot/counting.hpp"
#include "arcmot/reduction.hpp"
#include "arcmot/renaming.hpp"

using namespace arcmot;

namespace {

RingPtr qq(std::vector<std::string> vars) {
    return PolyRing::make(CoefficientField::rationals(), std::move(vars));
}

AffineScheme scheme_of(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, R));
    return AffineScheme::make(R, std::move(ps));
}

AffineScheme node() { return scheme_of(qq({"x", "y"}), {"x*y"}); }
AffineScheme cusp() { return scheme_of(qq({"x", "y"}), {"y^2 - x^3"}); }
std::vector<mpq_class> origin2() { return {mpq_class(0), mpq_class(0)}; }

}  // namespace

TEST_CASE("make_fat_point basics") {
    auto Rt = qq({"t"});
    FatPoint l2 = make_fat_point(Ideal(Rt, {parse_polynomial("t^2", Rt)}));
    CHECK(l2.length() == 2);
    CHECK(Rt->monomial_string(l2.basis()[0]) == "1");
    CHECK(Rt->monomial_string(l2.basis()[1]) == "t");

    auto Rtu = qq({"t", "u"});
    FatPoint fp = make_fat_point(Ideal(Rtu, {parse_polynomial("t^3", Rtu),
                                             parse_polynomial("u^2", Rtu),
                                             parse_polynomial("t*u", Rtu)}));
    CHECK(fp.length() == 4);
    std::multiset<std::string> basis;
    for (const auto& m : fp.basis()) basis.insert(Rtu->monomial_string(m));
    CHECK(basis == std::multiset<std::string>{"1", "t", "u", "t^2"});

    CHECK_THROWS_AS(make_fat_point(Ideal(Rt, {parse_polynomial("t - 1", Rt)})), Error);
}

TEST_CASE("jets") {
    auto R1 = qq({"x"});
    AffineScheme line = scheme_of(R1, {});
    for (unsigned n = 1; n <= 5; ++n) {
        FatPoint j = jet(line, {mpq_class(0)}, n);
        CHECK(j.length() == n);
    }

    CHECK(jet(cusp(), origin2(), 4).length() == 7);

    FatPoint smooth_pt = jet(node(), {mpq_class(1), mpq_class(0)}, 2);
    CHECK(smooth_pt.length() == 2);

    CHECK_THROWS_AS(jet(node(), {mpq_class(1), mpq_class(1)}, 2), Error);  // not on X
    CHECK_THROWS_AS(jet(node(), origin2(), 0), Error);
}

TEST_CASE("jet lengths of affine space are binomial") {
    for (unsigned d = 1; d <= 3; ++d) {
        std::vector<std::string> vars;
        for (unsigned i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i));
        AffineScheme Ad = scheme_of(qq(vars), {});
        std::vector<mpq_class> origin(d, mpq_class(0));
        for (unsigned n = 1; n <= 5; ++n) {
            unsigned long expect = 1;
            for (unsigned k = 1; k <= d; ++k) expect = expect * (n - 1 + k) / k;
            CHECK(jet(Ad, origin, n).length() == expect);
        }
    }
}

TEST_CASE("arc space of the node along l_2") {
    FatPoint l2 = linear_jet(CoefficientField::rationals(), 2);
    ArcPresentation arc = arc_space(node(), l2);
    CHECK(arc.grid_ring->nvars() == 4);
    REQUIRE(arc.generators.size() == 2);
    auto R = arc.grid_ring;
    std::multiset<std::string> gens;
    for (const auto& g : arc.generators) gens.insert(g.to_string());
    CHECK(gens.count(parse_polynomial("a_0_0*a_1_0", R).to_string()) == 1);
    CHECK(gens.count(parse_polynomial("a_0_0*a_1_1 + a_0_1*a_1_0", R).to_string()) == 1);
}

TEST_CASE("arc space of the affine line has no equations") {
    AffineScheme line = scheme_of(qq({"x"}), {});
    for (unsigned n = 1; n <= 4; ++n) {
        ArcPresentation arc = arc_space(line, linear_jet(CoefficientField::rationals(), n));
        CHECK(arc.grid_ring->nvars() == n);
        CHECK(arc.generators.empty());
    }
}

TEST_CASE("arc space of the cusp along l_2") {
    ArcPresentation arc = arc_space(cusp(), linear_jet(CoefficientField::rationals(), 2));
    REQUIRE(arc.generators.size() == 2);
    auto Rb = qq({"a0", "a1", "b0", "b1"});
    Ideal expect(Rb, {parse_polynomial("b0^2 - a0^3", Rb),
                      parse_polynomial("2*b0*b1 - 3*a0^2*a1", Rb)});
    auto pi = equal_up_to_renaming(arc.ideal(), expect);
    CHECK(pi.has_value());
}

TEST_CASE("grid size invariant") {
    FatPoint l3 = linear_jet(CoefficientField::rationals(), 3);
    ArcPresentation arc = arc_space(node(), l3);
    CHECK(arc.grid_ring->nvars() == 2 * 3);
    CHECK(arc.grid.size() == 2);
    CHECK(arc.grid[0].size() == 3);
}

TEST_CASE("arc space along l_1 is the scheme itself") {
    for (auto X : {node(), cusp()}) {
        ArcPresentation arc = arc_space(X, linear_jet(CoefficientField::rationals(), 1));
        auto pi = equal_up_to_renaming(arc.ideal(), X.ideal);
        CHECK(pi.has_value());
    }
}

TEST_CASE("auto arc of the affine line reduces to A^{n-1}") {
    AffineScheme line = scheme_of(qq({"x"}), {});
    for (unsigned n = 1; n <= 5; ++n) {
        ArcPresentation arc = auto_arc(line, {mpq_class(0)}, n);
        CHECK(arc.grid_ring->nvars() == n);
        ReducedPresentation red = heuristic_reduce(arc);
        auto rank = is_affine_space(red);
        REQUIRE(rank.has_value());
        CHECK(*rank == n - 1);
    }
}

TEST_CASE("auto arc of a point is a point") {
    AffineScheme pt = scheme_of(qq({}), {});
    ArcPresentation arc = auto_arc(pt, {}, 3);
    CHECK(arc.grid_ring->nvars() == 0);
    CHECK(arc.generators.empty());
}

TEST_CASE("product fat points multiply length") {
    FatPoint l2 = linear_jet(CoefficientField::rationals(), 2);
    FatPoint p = product_fat_point(l2, l2);
    CHECK(p.length() == 4);
    CHECK(p.ring()->nvars() == 2);

    FatPoint l1 = linear_jet(CoefficientField::rationals(), 1);
    FatPoint q = product_fat_point(l1, l2);
    CHECK(q.length() == 2);
    // Up to renaming after quotienting out the variable the unit factor kills:
    // the Groebner basis is {t, t_2^2}; dropping the linear generator leaves
    // the ideal of l_2 in the surviving variable.
    std::vector<Polynomial> survivors;
    for (const auto& g : q.gb().basis())
        if (!(g.is_monomial_multiple() && g.total_degree() == 1)) survivors.push_back(g);
    REQUIRE(survivors.size() == 1);
    Ideal remainder(q.ring(), survivors);
    auto pi = equal_up_to_renaming(remainder, l2.ideal());
    CHECK(pi.has_value());
}

TEST_CASE("arc functor composes over products") {
    FatPoint l2 = linear_jet(CoefficientField::rationals(), 2);
    FatPoint l3 = linear_jet(CoefficientField::rationals(), 3);
    for (auto X : {node(), cusp()}) {
        for (const auto* pair : {&l2, &l3}) {
            FatPoint prod = product_fat_point(l2, *pair);
            ArcPresentation joint = arc_space(X, prod);
            ArcPresentation staged = arc_space(as_scheme(arc_space(X, l2)), *pair);
            RenamingOptions opts;
            opts.max_occurring_vars = 16;
            auto pi = equal_up_to_renaming(joint.ideal(), staged.ideal(), opts);
            CHECK(pi.has_value());
        }
    }
}

TEST_CASE("point functor consistency over small prime fields") {
    // #Hom(k[grid]/I -> F_p) must equal the number of pairs of fat-ring
    // elements solving the node equation, counted by double brute force.
    for (unsigned long p : {2ul, 3ul}) {
        ArcPresentation arc = arc_space(node(), linear_jet(CoefficientField::rationals(), 2));
        mpz_class lhs = count_points(reduce_mod_p(arc.ideal(), p));

        // pairs (a0 + a1 t, b0 + b1 t) with product == 0 mod t^2
        unsigned long count = 0;
        for (unsigned long a0 = 0; a0 < p; ++a0)
            for (unsigned long a1 = 0; a1 < p; ++a1)
                for (unsigned long b0 = 0; b0 < p; ++b0)
                    for (unsigned long b1 = 0; b1 < p; ++b1) {
                        unsigned long c0 = (a0 * b0) % p;
                        unsigned long c1 = (a0 * b1 + a1 * b0) % p;
                        if (c0 == 0 && c1 == 0) ++count;
                    }
        CHECK(lhs == mpz_class(count));
    }
}
