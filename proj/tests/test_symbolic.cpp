#include <catch2/catch_amalgamated.hpp>

#include "enq/group_scheme.hpp"
#include "enq/point_ring.hpp"
#include "enq/symbolic.hpp"

using namespace enq;

TEST_CASE("relation ab = 2 reduces eagerly", "[symbolic]") {
    Sym a = Sym::gen_a(), b = Sym::gen_b();
    CHECK(a * b == Sym(2));
    CHECK(b * a == Sym(2));
    CHECK(a * a * b == Sym(2) * a);
    CHECK(a * b * b == Sym(2) * b);
    CHECK(a * a * b * b == Sym(4));
    CHECK((a + b) * (a + b) == a * a + Sym(4) + b * b);
    CHECK((a - a).is_zero());
}

TEST_CASE("string forms round-trip", "[symbolic]") {
    Sym a = Sym::gen_a(), b = Sym::gen_b();
    Sym e = b * b * Sym(-1) + Sym(3) + Sym(2) * a;
    CHECK(e.to_string() == "-b^2+3+2*a");
    CHECK(Sym::parse(e.to_string()) == e);
    CHECK(Sym::parse("0").is_zero());
    CHECK(Sym::parse("a") == a);
    CHECK(Sym::parse("-b") == Sym(-1) * b);
    CHECK(Sym::parse(" 2*a^3 - b + 7 ") == Sym(2) * a * a * a - b + Sym(7));
    CHECK(Sym(0).to_string() == "0");
    CHECK(Sym(1).to_string() == "1");
}

TEST_CASE("specialization respects the relation", "[symbolic]") {
    Sym a = Sym::gen_a(), b = Sym::gen_b();
    const FiniteField& F3 = make_field(3, 1);
    auto at = [&](const Sym& s, uint32_t av, uint32_t bv) {
        return s.substitute<FieldElement>(FieldElement(F3, av), FieldElement(F3, bv),
                                          [&](long long n) { return FieldElement(F3, F3.from_int(n)); });
    };
    // (a, b) = (1, 2) satisfies ab = 2 in F3
    CHECK(at(a * b, 1, 2).code() == 2);
    CHECK(at(a * a - b, 1, 2).code() == F3.add(1, F3.neg(2)));
    CHECK(at(Sym(-1), 1, 2).code() == 2);
}

TEST_CASE("formal group point obeys the defining equation", "[symbolic][group-law]") {
    using P = PointRingElt<Sym>;
    Sym a = Sym::gen_a(), b = Sym::gen_b(), one(1);
    P s = P::gen(a, one);
    CHECK(s * s == P(a) * s); // s^2 = a s
    P u = P(one) - P(b) * s;  // the unit 1 - bs
    CHECK(u * u == P(one));   // (1 - bs)^2 = 1 given ab = 2
}

TEST_CASE("composition law is a group law on formal points", "[symbolic][group-law]") {
    // Two independent generators: nest the coordinate ring once per generator.
    using P1 = PointRingElt<Sym>;
    using P2 = PointRingElt<P1>;
    Sym a = Sym::gen_a(), b = Sym::gen_b(), one(1);
    P1 s1 = P1::gen(a, one);
    P2 s = P2(s1);                    // first generator, constant in the outer ring
    P2 t = P2::gen(P1(a), P1(one));   // second generator
    P2 m = s + t - P2(P1(b)) * s * t; // composition s + t - b s t

    CHECK(m * m == P2(P1(a)) * m); // closure: m^2 = a m
    // identity element 0: m(s, 0) = s
    P2 zero{};
    CHECK((s + zero - P2(P1(b)) * s * zero) == s);
    // self-inverse: m(s, s) = 2s - b s^2 = 2s - (ab) s = 0
    P1 self = s1 + s1 - P1(b) * s1 * s1;
    CHECK(self.c0().is_zero());
    CHECK(self.c1().is_zero());
}

TEST_CASE("regular representation is a homomorphism", "[symbolic][group-law]") {
    using P1 = PointRingElt<Sym>;
    using P2 = PointRingElt<P1>;
    Sym a = Sym::gen_a(), b = Sym::gen_b(), one(1);
    P2 s = P2(P1::gen(a, one));
    P2 t = P2::gen(P1(a), P1(one));
    P2 pa = P2(P1(a)), pb = P2(P1(b)), pone = P2(P1(one));

    auto rs = regular_representation(s, pa, pb, pone);
    auto rt = regular_representation(t, pa, pb, pone);
    P2 m = group_law(s, t, pa, pb);
    auto rm = regular_representation(m, pa, pb, pone);
    auto prod = mat2_mul(rs, rt);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(prod[std::size_t(i)][std::size_t(j)] == rm[std::size_t(i)][std::size_t(j)]);
}

TEST_CASE("generator bookkeeping rejects mixing", "[symbolic]") {
    using P = PointRingElt<Sym>;
    Sym a = Sym::gen_a(), b = Sym::gen_b(), one(1);
    P s = P::gen(a, one);
    P t = P::gen(b, one); // different defining parameter
    CHECK_THROWS_AS(s * t, std::invalid_argument);
    CHECK_THROWS_AS(s + t, std::invalid_argument);
    CHECK((P(a) * P(b)).c0() == Sym(2)); // constants always combine
}
