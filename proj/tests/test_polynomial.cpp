#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcmot/polynomial.hpp"

using namespace arcmot;

namespace {

RingPtr qq_xy() { return PolyRing::make(CoefficientField::rationals(), {"x", "y"}); }

Polynomial rand_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 5, int max_deg = 3,
                     int max_coeff = 7) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> dexp(0, max_deg);
    std::uniform_int_distribution<int> dcoef(-max_coeff, max_coeff);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m(ring->nvars());
        for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, dexp(rng));
        terms.push_back({m, mpq_class(dcoef(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("parse basic forms") {
    auto R = qq_xy();
    Polynomial p = parse_polynomial("y^2 - x^3", R);
    CHECK(p.term_count() == 2);
    CHECK(p.coeff_of(R->var_monomial(1, 2)).value() == 1);
    CHECK(p.coeff_of(R->var_monomial(0, 3)).value() == -1);

    CHECK(parse_polynomial("0", R).is_zero());

    Polynomial sq = parse_polynomial("(x+y)^2", R);
    CHECK(sq == parse_polynomial("x^2 + 2*x*y + y^2", R));

    CHECK(parse_polynomial("1/2*x + 1/2*x", R) == parse_polynomial("x", R));
    CHECK_THROWS_AS(parse_polynomial("z + 1", R), Error);
    CHECK_THROWS_AS(parse_polynomial("x^-2", R), Error);
    CHECK_THROWS_AS(parse_polynomial("x y", R), Error);  // no implicit multiplication
}

TEST_CASE("arith basics") {
    auto R = qq_xy();
    Polynomial x = parse_polynomial("x", R), y = parse_polynomial("y", R);
    CHECK((x + y) * (x - y) == parse_polynomial("x^2 - y^2", R));
    CHECK(parse_polynomial("x+1", R).pow(0) == parse_polynomial("1", R));

    auto F2 = PolyRing::make(CoefficientField::prime(2), {"x", "y"});
    Polynomial s = parse_polynomial("x+y", F2);
    CHECK(s.pow(2) == parse_polynomial("x^2 + y^2", F2));
    // brute check on all F_2 points
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            std::vector<mpq_class> pt{a, b};
            CHECK(F2->field().normalize(s.pow(2).evaluate(pt)) ==
                  F2->field().normalize(s.evaluate(pt) * s.evaluate(pt)));
        }
}

TEST_CASE("substitute") {
    auto R = qq_xy();
    auto S = PolyRing::make(CoefficientField::rationals(), {"s"});
    Polynomial cusp = parse_polynomial("y^2 - x^3", R);
    std::map<std::string, Polynomial> images{{"x", parse_polynomial("s^2", S)},
                                             {"y", parse_polynomial("s^3", S)}};
    CHECK(cusp.substitute(S, images).is_zero());

    std::map<std::string, Polynomial> ident{{"x", parse_polynomial("x", R)}};
    CHECK(parse_polynomial("x", R).substitute(R, ident) == parse_polynomial("x", R));

    auto T = PolyRing::make(CoefficientField::rationals(), {"a0", "a1", "b0", "b1", "t"});
    std::map<std::string, Polynomial> arcs{{"x", parse_polynomial("a0 + a1*t", T)},
                                           {"y", parse_polynomial("b0 + b1*t", T)}};
    Polynomial xy = parse_polynomial("x*y", R);
    CHECK(xy.substitute(T, arcs) ==
          parse_polynomial("a0*b0 + (a0*b1 + a1*b0)*t + a1*b1*t^2", T));
}

TEST_CASE("ring axioms on random polynomials") {
    for (auto field : {CoefficientField::rationals(), CoefficientField::prime(5)}) {
        auto R = PolyRing::make(field, {"x", "y"});
        std::mt19937 rng(12345);
        for (int iter = 0; iter < 1000; ++iter) {
            Polynomial a = rand_poly(R, rng), b = rand_poly(R, rng), c = rand_poly(R, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("parse of to_string is the identity") {
    std::mt19937 rng(777);
    for (auto field : {CoefficientField::rationals(), CoefficientField::prime(5)}) {
        auto R = PolyRing::make(field, {"x", "y"});
        for (int iter = 0; iter < 300; ++iter) {
            Polynomial a = rand_poly(R, rng, 6, 4, 9);
            CHECK(parse_polynomial(a.to_string(), R) == a);
        }
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    auto R = qq_xy();
    auto T = PolyRing::make(CoefficientField::rationals(), {"u", "v"});
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial a = rand_poly(R, rng), b = rand_poly(R, rng);
        std::map<std::string, Polynomial> im{{"x", rand_poly(T, rng, 3, 2)},
                                             {"y", rand_poly(T, rng, 3, 2)}};
        CHECK((a * b).substitute(T, im) == a.substitute(T, im) * b.substitute(T, im));
        CHECK((a + b).substitute(T, im) == a.substitute(T, im) + b.substitute(T, im));
    }
}

TEST_CASE("F_p evaluation commutes with arith and substitute") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        auto F = CoefficientField::prime(p);
        auto R = PolyRing::make(F, {"x", "y", "z"});
        std::mt19937 rng(5 + p);
        Polynomial a = rand_poly(R, rng, 4, 2), b = rand_poly(R, rng, 4, 2);
        std::map<std::string, Polynomial> im{{"x", rand_poly(R, rng, 2, 1)},
                                             {"y", rand_poly(R, rng, 2, 1)},
                                             {"z", rand_poly(R, rng, 2, 1)}};
        Polynomial prod = a * b;
        Polynomial sub = a.substitute(R, im);
        for (unsigned long i = 0; i < p; ++i)
            for (unsigned long j = 0; j < p; ++j)
                for (unsigned long k = 0; k < p; ++k) {
                    std::vector<mpq_class> pt{mpq_class((long)i), mpq_class((long)j),
                                              mpq_class((long)k)};
                    CHECK(F.normalize(prod.evaluate(pt)) ==
                          F.normalize(a.evaluate(pt) * b.evaluate(pt)));
                    std::vector<mpq_class> ipt{F.normalize(im.at("x").evaluate(pt)),
                                               F.normalize(im.at("y").evaluate(pt)),
                                               F.normalize(im.at("z").evaluate(pt))};
                    CHECK(F.normalize(sub.evaluate(pt)) == F.normalize(a.evaluate(ipt)));
                }
    }
}

TEST_CASE("canonical string format") {
    auto R = qq_xy();
    CHECK(parse_polynomial("y^2 - x^3", R).to_string() == "-1*x^3 + y^2");
    CHECK(parse_polynomial("3/2*x - 5", R).to_string() == "3/2*x - 5");
    CHECK(parse_polynomial("0", R).to_string() == "0");
}
