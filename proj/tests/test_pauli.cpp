#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kitpulse/pauli.hpp"

using namespace kitpulse;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("single-site products follow the Pauli algebra") {
    const auto x = pauli(Axis::X, 0), y = pauli(Axis::Y, 0), z = pauli(Axis::Z, 0);

    auto xy = multiply(x, y);
    CHECK(xy.coeff == I);
    CHECK(xy.axes == std::vector<std::pair<int, Axis>>{{0, Axis::Z}});

    auto yx = multiply(y, x);
    CHECK(yx.coeff == -I);

    auto yz = multiply(y, z);
    CHECK(yz.coeff == I);
    CHECK(yz.axes.front().second == Axis::X);

    auto zx = multiply(z, x);
    CHECK(zx.coeff == I);
    CHECK(zx.axes.front().second == Axis::Y);

    auto xx = multiply(x, x);
    CHECK(xx.is_identity());
    CHECK(xx.coeff == cplx{1.0, 0.0});
}

TEST_CASE("multi-site products merge disjoint and overlapping support") {
    const PauliString a{1.0, {{0, Axis::X}, {2, Axis::Y}}};
    const PauliString b{2.0, {{1, Axis::Z}, {2, Axis::Y}}};
    const auto ab = multiply(a, b);
    CHECK(ab.coeff == cplx{2.0, 0.0});
    CHECK(ab.axes == std::vector<std::pair<int, Axis>>{{0, Axis::X}, {1, Axis::Z}});
}

TEST_CASE("constructor sorts sites and rejects duplicates") {
    const PauliString p{1.0, {{3, Axis::X}, {1, Axis::Z}}};
    CHECK(p.axes.front().first == 1);
    CHECK_THROWS_AS((PauliString{1.0, {{2, Axis::X}, {2, Axis::Y}}}), dimension_error);
    CHECK_THROWS_AS((PauliString{1.0, {{-1, Axis::X}}}), dimension_error);
}

TEST_CASE("pulse conjugation preserves the pulse axis and negates the others") {
    PulsePattern p;
    p.axis = {Rot::X, Rot::None, Rot::Z};

    const auto keep = conjugate_by_pulse(pauli(Axis::X, 0), p);
    CHECK(keep.coeff == cplx{1.0, 0.0});

    const auto flip = conjugate_by_pulse(pauli(Axis::Y, 0), p);
    CHECK(flip.coeff == cplx{-1.0, 0.0});

    const auto unpulsed = conjugate_by_pulse(pauli(Axis::Y, 1), p);
    CHECK(unpulsed.coeff == cplx{1.0, 0.0});

    // double negation on a two-site string
    const PauliString two{1.0, {{0, Axis::Y}, {2, Axis::X}}};
    CHECK(conjugate_by_pulse(two, p).coeff == cplx{1.0, 0.0});

    CHECK_THROWS_AS(conjugate_by_pulse(pauli(Axis::X, 5), p), dimension_error);
}

TEST_CASE("conjugation is involutive on operator sums") {
    OperatorSum h(3);
    h.add(PauliString{0.7, {{0, Axis::X}, {1, Axis::X}}});
    h.add(PauliString{-1.2, {{1, Axis::Y}, {2, Axis::Z}}});
    PulsePattern p;
    p.axis = {Rot::Z, Rot::Y, Rot::None};
    const auto twice = conjugate_by_pulse(conjugate_by_pulse(h, p), p);
    CHECK(normalize(subtract(twice, h)).empty());
}

TEST_CASE("normalize merges duplicates and drops tiny coefficients") {
    OperatorSum a(2);
    a.add(PauliString{1.0, {{0, Axis::X}}});
    a.add(PauliString{2.0, {{0, Axis::X}}});
    a.add(PauliString{1e-15, {{1, Axis::Z}}});
    const auto n = normalize(a);
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms[0].coeff == cplx{3.0, 0.0});

    CHECK(normalize(n).terms.size() == 1);  // idempotent
}

TEST_CASE("add/subtract/scale/commutator behave algebraically") {
    OperatorSum x(1), z(1);
    x.add(pauli(Axis::X, 0));
    z.add(pauli(Axis::Z, 0));

    CHECK(normalize(subtract(add(x, z), add(z, x))).empty());

    // [Z, X] = 2iY
    const auto c = commutator(z, x);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].coeff == cplx{0.0, 2.0});
    CHECK(c.terms[0].axes.front().second == Axis::Y);

    CHECK(normalize(commutator(x, x)).empty());

    OperatorSum other(2);
    CHECK_THROWS_AS(add(x, other), dimension_error);
}

TEST_CASE("hermiticity is coefficient realness after normalization") {
    OperatorSum h(2);
    h.add(PauliString{0.5, {{0, Axis::X}, {1, Axis::Y}}});
    CHECK(is_hermitian(h));

    OperatorSum g(2);
    g.add(PauliString{cplx{0.0, 0.3}, {{0, Axis::X}}});
    CHECK(!is_hermitian(g));

    // cancellation can restore Hermiticity
    g.add(PauliString{cplx{0.0, -0.3}, {{0, Axis::X}}});
    CHECK(is_hermitian(g));
}

TEST_CASE("coefficient one-norm skips the identity part") {
    OperatorSum h(2);
    h.add(PauliString{2.0, {}});
    h.add(PauliString{cplx{0.0, -3.0}, {{0, Axis::Y}}});
    h.add(PauliString{1.5, {{1, Axis::Z}}});
    CHECK(coefficient_one_norm(h) == doctest::Approx(4.5).epsilon(1e-14));
}
