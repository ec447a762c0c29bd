#include <doctest.h>

#include "pk/calculus.hpp"
#include "pk/parser.hpp"
#include "pk/random.hpp"

using namespace pk;

TEST_CASE("de Rham differential") {
    const Space sp{2, 2, Side::MN};
    CHECK(de_rham_d(parse("x1", sp), sp) == parse("dx1", sp));
    CHECK(de_rham_d(parse("x1*x2", sp), sp) == parse("dx1*x2 + x1*dx2", sp));
    // d(y1 y2): the second letter is reached past weight-0 y1, no sign
    CHECK(de_rham_d(parse("y1*y2", sp), sp) == parse("dy1*y2 + y1*dy2", sp));
    CHECK(de_rham_d(parse("dx1*x1", sp), sp) == -parse("dx1*dx1", sp));

    const Space nm{2, 2, Side::NM};
    // d(eta^2) = -2 eta deta: the prefix eta has odd weight
    CHECK(de_rham_d(parse("eta1^2", nm), nm) == parse("-2*eta1*deta1", nm));

    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        Poly f = random_polyvector(rng, sp, rng.uniform(0, 3), 0, 3);
        Poly w = de_rham_d(f, sp);
        CHECK(de_rham_d(w, sp) == Poly::zero());
    }
}

TEST_CASE("mixed differential squares to zero and raises k") {
    for (Side side : {Side::MN, Side::NM}) {
        const Space sp{2, 2, side};
        Rng rng(11);
        for (int it = 0; it < 60; ++it) {
            Poly a = random_mixed_chain(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 3);
            Poly da = mixed_d(a, sp);
            CHECK(mixed_d(da, sp) == Poly::zero());
            for (const auto& [m, c] : da.terms()) {
                CHECK(count_role(m, Role::Form) + count_role(m, Role::Star) >= 1);
            }
        }
    }
}

TEST_CASE("ordinary contraction anchors") {
    const Space sp{2, 2, Side::MN};
    auto C = [&](const char* p, const char* w) {
        return contract(parse(p, sp), parse(w, sp), Scheme::Ordinary, sp);
    };
    CHECK(C("Dx1", "dx1") == Poly::one());
    CHECK(C("Dx1", "dx2") == Poly::zero());
    CHECK(C("Dx1", "dx2*dx1") == -parse("dx2", sp)); // crosses odd dx2
    CHECK(C("Dy1", "dy1*dy1") == parse("2*dy1", sp));
    CHECK(C("x1*Dx1", "dx1") == parse("x1", sp));
    CHECK(C("x1", "dx1") == parse("x1*dx1", sp)); // rank 0 multiplies
    CHECK(C("Dx1*Dx2", "dx2*dx1") == Poly::one());
    CHECK(C("Dx1", "x2*dx1") == parse("x2", sp));
}

TEST_CASE("mixed contraction anchors") {
    const Space sp{1, 1, Side::MN};
    auto C = [&](const char* p, const char* w) {
        return contract(parse(p, sp), parse(w, sp), Scheme::Mixed, sp);
    };
    CHECK(C("y1", "ys1") == Poly::one());
    CHECK(C("Dx1", "dx1") == Poly::one());
    CHECK(C("y1*Dx1", "dx1*ys1") == Poly::one()); // i_{y} after i_{Dx}
    CHECK(C("Dy1", "ys1") == parse("Dy1*ys1", sp)); // Dy is a coefficient here
    CHECK(C("x1*y1", "ys1") == parse("x1", sp));
}

TEST_CASE("contraction is multiplicative over the wedge") {
    for (Side side : {Side::MN, Side::NM}) {
        const Space sp{2, 2, side};
        Rng rng(13);
        for (int it = 0; it < 60; ++it) {
            Poly p = random_polyvector(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
            Poly q = random_polyvector(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
            Poly c = random_mixed_chain(rng, sp, rng.uniform(0, 2), rng.uniform(0, 2), 2);
            Poly lhs = contract(p * q, c, Scheme::Mixed, sp);
            Poly rhs = contract(p, contract(q, c, Scheme::Mixed, sp), Scheme::Mixed, sp);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lie derivative is a bracket with d") {
    const Space sp{2, 1, Side::MN};
    // L_X on functions is X(f) for a vector field X = f Dz
    const Poly X = parse("x1*Dx2", sp);
    CHECK(lie_derivative(X, parse("x2", sp), Scheme::Ordinary, sp) == parse("x1", sp));
    CHECK(lie_derivative(X, parse("x1", sp), Scheme::Ordinary, sp) == Poly::zero());
    // L_X d = d L_X
    Rng rng(17);
    for (int it = 0; it < 40; ++it) {
        Poly f = random_polyvector(rng, sp, rng.uniform(0, 2), 0, 2);
        Poly w = de_rham_d(f, sp);
        Poly lhs = lie_derivative(X, w, Scheme::Ordinary, sp);
        CHECK(de_rham_d(lie_derivative(X, f, Scheme::Ordinary, sp), sp) == lhs);
    }
}

TEST_CASE("unshuffle reassembles with its sign") {
    const Space sp{2, 2, Side::MN};
    Rng rng(19);
    for (int it = 0; it < 80; ++it) {
        Poly p = random_polyvector(rng, sp, rng.uniform(0, 3), rng.uniform(0, 3), 1);
        Poly back;
        unshuffle(
            p, [](Gen g) { return g.role == Role::Var; },
            [&](int sign, const Monomial& l, const Monomial& r, const mpq_class& c) {
                mpq_class cc = c;
                if (sign < 0) cc = -cc;
                back += Poly::term(l, cc) * Poly::term(r, 1);
            });
        CHECK(back == p);
    }
}
