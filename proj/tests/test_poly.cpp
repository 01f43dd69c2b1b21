#include <doctest.h>

#include "charcodes/poly.hpp"
#include "charcodes/rng.hpp"

using namespace charcodes;

namespace {

Poly rand_poly(const FieldRef& f, size_t max_deg, Rng& rng, bool nonzero = false) {
    while (true) {
        std::vector<Fq> c(rng.below(max_deg + 2));
        for (Fq& x : c) x = Fq(static_cast<uint32_t>(rng.below(f->q())));
        Poly p = Poly::from_coeffs(f, std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("normalization and degree") {
    auto f = make_field(5, 1);
    Poly z = Poly::zero(f);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.degree(), ZeroPolynomial);
    Poly p = Poly::from_coeffs(f, {Fq(1), Fq(0), Fq(0)});
    CHECK(p.degree() == 0);
    Poly a = Poly::from_coeffs(f, {Fq(2), Fq(3)});
    Poly b = Poly::from_coeffs(f, {Fq(1), Fq(2)});
    CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("gcd and divmod examples") {
    auto f5 = make_field(5, 1);
    // gcd(X^2 - 1, X - 1) = X - 1
    Poly a = Poly::from_coeffs(f5, {f5->element(4), Fq(0), Fq(1)});
    Poly b = Poly::from_coeffs(f5, {f5->element(4), Fq(1)});
    CHECK(gcd(a, b) == b.monic());

    auto f2 = make_field(2, 1);
    Poly xp1 = Poly::from_coeffs(f2, {Fq(1), Fq(1)});
    Poly sq = xp1 * xp1;
    CHECK(sq == Poly::from_coeffs(f2, {Fq(1), Fq(0), Fq(1)}));

    auto f7 = make_field(7, 1);
    Poly x3 = Poly::monomial(f7, Fq(1), 3);
    Poly xm2 = Poly::from_coeffs(f7, {f7->element(5), Fq(1)});
    auto [q, r] = divmod(x3, xm2);
    CHECK(q == Poly::from_coeffs(f7, {Fq(4), Fq(2), Fq(1)}));
    CHECK(r == Poly::constant(f7, Fq(1)));
    CHECK_THROWS_AS(divmod(x3, Poly::zero(f7)), DivideByZero);
}

TEST_CASE("evaluation") {
    auto f5 = make_field(5, 1);
    CHECK(Poly::zero(f5).evaluate(Fq(3)) == Fq(0));
    Poly p = Poly::from_coeffs(f5, {Fq(1), Fq(0), Fq(1)});  // X^2 + 1
    CHECK(p.evaluate(Fq(2)) == Fq(0));
    auto f4 = make_field(2, 2);
    Poly x2 = Poly::monomial(f4, Fq(1), 2);
    CHECK(x2.evaluate(f4->element(2)) == f4->element(3));
    CHECK(p.evaluate_all().size() == 5);
}

TEST_CASE("hasse derivative examples") {
    auto f5 = make_field(5, 1);
    Poly x3 = Poly::monomial(f5, Fq(1), 3);
    CHECK(hasse_derivative(x3, 2) == Poly::from_coeffs(f5, {Fq(0), Fq(3)}));
    Poly x5 = Poly::monomial(f5, Fq(1), 5);
    CHECK(hasse_derivative(x5, 1).is_zero());
    CHECK(hasse_derivative(x5, 5) == Poly::constant(f5, Fq(1)));
    CHECK(hasse_derivative(x5, 0) == x5);
    CHECK(hasse_derivative(x5, 6).is_zero());
}

TEST_CASE("hasse product rule on random instances") {
    Rng rng(21);
    for (auto [p, b] : {std::pair<uint64_t, uint64_t>{5, 1}, {2, 3}, {7, 2}}) {
        auto f = make_field(p, b);
        for (int t = 0; t < 60; ++t) {
            Poly a = rand_poly(f, 30, rng);
            Poly bb = rand_poly(f, 30, rng);
            uint64_t ell = rng.below(11);
            Poly lhs = hasse_derivative(a * bb, ell);
            Poly rhs = Poly::zero(f);
            for (uint64_t l1 = 0; l1 <= ell; ++l1)
                rhs = rhs + hasse_derivative(a, l1) * hasse_derivative(bb, ell - l1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("iterated hasse derivatives compose with a binomial") {
    Rng rng(22);
    auto f = make_field(7, 1);
    for (int t = 0; t < 60; ++t) {
        Poly a = rand_poly(f, 40, rng);
        uint64_t i = rng.below(6), j = rng.below(6);
        Poly lhs = hasse_derivative(hasse_derivative(a, i), j);
        Poly rhs = hasse_derivative(a, i + j).scaled(f->binomial(i + j, j));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplicity examples and agreement with the derivative criterion") {
    auto f7 = make_field(7, 1);
    Poly xm1 = Poly::from_coeffs(f7, {f7->element(6), Fq(1)});
    Poly xm2 = Poly::from_coeffs(f7, {f7->element(5), Fq(1)});
    Poly a = xm1.pow(3) * xm2;
    CHECK(multiplicity(a, Fq(1)) == 3);
    CHECK(multiplicity(a, Fq(0)) == 0);

    auto f2 = make_field(2, 1);
    Poly c = Poly::from_coeffs(f2, {Fq(1), Fq(0), Fq(1)});  // X^2 + 1 = (X+1)^2
    CHECK(multiplicity(c, Fq(1)) == 2);
    CHECK_THROWS_AS(multiplicity(Poly::zero(f2), Fq(0)), ZeroPolynomial);

    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        Poly r = rand_poly(f7, 12, rng, true);
        Fq alpha(static_cast<uint32_t>(rng.below(7)));
        size_t m = multiplicity(r, alpha);
        // least l with nonzero l-th derivative at alpha
        size_t viaderiv = 0;
        while (hasse_derivative(r, viaderiv).evaluate(alpha) == Fq(0)) ++viaderiv;
        CHECK(m == viaderiv);
    }
}

TEST_CASE("squarefree core") {
    auto f5 = make_field(5, 1);
    Poly x = Poly::x(f5);
    Poly xm1 = Poly::from_coeffs(f5, {f5->element(4), Fq(1)});

    auto simple = squarefree_core(xm1);
    CHECK(simple.unit == Fq(1));
    CHECK(simple.core == xm1);
    CHECK(simple.square_part.is_one());

    // g = 2 (X-1)^2 X -> (2, X, X-1)
    Poly g = (xm1 * xm1 * x).scaled(Fq(2));
    auto sc = squarefree_core(g);
    CHECK(sc.unit == Fq(2));
    CHECK(sc.core == x);
    CHECK(sc.square_part == xm1);
    CHECK((sc.square_part * sc.square_part * sc.core).scaled(sc.unit) == g);

    auto cst = squarefree_core(Poly::constant(f5, Fq(3)));
    CHECK(cst.unit == Fq(3));
    CHECK(cst.core.is_one());
    CHECK(cst.square_part.is_one());

    CHECK_THROWS_AS(squarefree_core(Poly::zero(f5)), ZeroPolynomial);
}

TEST_CASE("squarefree core on random instances including p-th powers") {
    Rng rng(24);
    for (auto [p, b] : {std::pair<uint64_t, uint64_t>{5, 1}, {3, 2}, {7, 1}}) {
        auto f = make_field(p, b);
        for (int t = 0; t < 50; ++t) {
            Poly g = rand_poly(f, 6, rng, true) * rand_poly(f, 3, rng, true).pow(rng.below(4)) *
                     rand_poly(f, 2, rng, true).pow(p);
            auto sc = squarefree_core(g);
            CHECK((sc.core * sc.square_part * sc.square_part).scaled(sc.unit) == g);
            CHECK(sc.core.is_monic());
            CHECK(sc.square_part.is_monic());
            if (!sc.core.is_constant()) CHECK(gcd(sc.core, hasse_derivative(sc.core, 1)).is_one());
        }
    }
}

TEST_CASE("odd-degree core") {
    auto f4 = make_field(2, 2);
    Poly x = Poly::x(f4);

    auto just_x = odd_core(x);
    CHECK(just_x.constant == Fq(0));
    CHECK(just_x.odd_part == x);
    CHECK(just_x.shift.is_zero());

    auto xsq = odd_core(Poly::monomial(f4, Fq(1), 2));
    CHECK(xsq.constant == Fq(0));
    CHECK(xsq.odd_part == x);
    CHECK(xsq.shift == x);

    auto one = odd_core(Poly::constant(f4, Fq(1)));
    CHECK(one.constant == Fq(1));
    CHECK(one.odd_part.is_zero());
    CHECK(one.shift.is_zero());

    CHECK_THROWS_AS(odd_core(Poly::x(make_field(5, 1))), OddCharacteristic);

    Rng rng(25);
    for (auto [p, b] : {std::pair<uint64_t, uint64_t>{2, 4}, {2, 6}, {2, 8}}) {
        auto f = make_field(p, b);
        for (int t = 0; t < 30; ++t) {
            Poly g = rand_poly(f, 9, rng);
            auto oc = odd_core(g);
            CHECK(Poly::constant(f, oc.constant) + oc.odd_part + oc.shift + oc.shift * oc.shift ==
                  g);
            if (!oc.odd_part.is_zero())
                for (size_t i = 0; i <= oc.odd_part.degree(); i += 2)
                    CHECK(oc.odd_part.coeff(i) == Fq(0));
            CHECK(oc.shift.coeff(0) == Fq(0));
            // the trace only sees the constant and the odd part
            Poly visible = Poly::constant(f, oc.constant) + oc.odd_part;
            for (uint64_t n = 0; n < f->q(); ++n) {
                Fq alpha(static_cast<uint32_t>(n));
                CHECK(f->trace(g.evaluate(alpha)) == f->trace(visible.evaluate(alpha)));
            }
        }
    }
}
