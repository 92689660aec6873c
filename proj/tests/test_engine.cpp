#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "enq/projective.hpp"
#include "enq/surface.hpp"

using namespace enq;

TEST_CASE("projective point totals", "[engine]") {
    CHECK(p5_size(2) == 63);
    CHECK(p5_size(4) == 1365);
    CHECK(p5_size(8) == 37449);
    CHECK(p5_size(16) == 1118481);
    CHECK(p5_size(3) == 364);
    CHECK(p5_size(9) == 66430);
}

TEST_CASE("canonical enumeration order", "[engine]") {
    const FiniteField& F = make_field(2, 1);
    PointEnum en(F);
    REQUIRE(en.size() == 63);
    CHECK(en.point_at(0) == Pt6{1, 0, 0, 0, 0, 0});  // patch 0 first, free part counts up
    CHECK(en.point_at(1) == Pt6{1, 0, 0, 0, 0, 1});
    CHECK(en.point_at(31) == Pt6{1, 1, 1, 1, 1, 1}); // last of patch 0
    CHECK(en.point_at(32) == Pt6{0, 1, 0, 0, 0, 0}); // patch 1 starts
    CHECK(en.point_at(62) == Pt6{0, 0, 0, 0, 0, 1}); // final patch is a single point

    // for_each agrees with point_at on every index
    std::vector<Pt6> walked;
    en.for_each(0, en.size(), [&](const Pt6& p, uint64_t) { walked.push_back(p); });
    REQUIRE(walked.size() == 63);
    for (uint64_t i = 0; i < 63; ++i) CHECK(walked[i] == en.point_at(i));

    // every representative is normalized and distinct
    std::set<Pt6> seen(walked.begin(), walked.end());
    CHECK(seen.size() == 63);
    for (auto& p : walked) CHECK(normalize_point(p, F) == p);
}

TEST_CASE("zero system recovers all of projective space", "[engine]") {
    const FiniteField& F = make_field(2, 1);
    std::array<Quad21, 3> zero3{};
    CHECK(zero_locus(zero3, F).size() == 63);
    CHECK(zero_locus_naive(zero3, F).size() == 63);
}

TEST_CASE("batch evaluation matches the naive oracle", "[engine][equivalence]") {
    // criterion: exhaustive agreement over F2 and F4 for 20 random systems
    for (auto [p, k] : {std::pair<uint32_t, int>{2, 1}, {2, 2}}) {
        const FiniteField& F = make_field(p, k);
        for (uint64_t seed = 1000; seed < 1010; ++seed) {
            QuadricSystem sys = sample_system(F, 1, 0, seed);
            auto batch = zero_locus(sys.quads, F);
            auto naive = zero_locus_naive(sys.quads, F);
            CHECK(batch == naive);
        }
    }
}

TEST_CASE("parallel slabs concatenate to the serial answer", "[engine][equivalence]") {
    const FiniteField& F4 = make_field(2, 2);
    for (uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        QuadricSystem sys = sample_system(F4, 0, 1, seed);
        auto serial = zero_locus(sys.quads, F4, 1);
        for (unsigned nt : {2u, 3u, 8u}) CHECK(zero_locus(sys.quads, F4, nt) == serial);
    }
}

TEST_CASE("frobenius on points", "[engine]") {
    const FiniteField& F2 = make_field(2, 1);
    PointEnum en(F2);
    for (uint64_t i = 0; i < en.size(); ++i) {
        Pt6 p = en.point_at(i);
        CHECK(frobenius_point(p, F2, 1) == p); // prime-field points are fixed
    }
    const FiniteField& F4 = make_field(2, 2);
    Pt6 p{1, 2, 3, 0, 1, 2};
    Pt6 fp = frobenius_point(p, F4, 1);
    for (int i = 0; i < 6; ++i) CHECK(fp[std::size_t(i)] == F4.frobenius(p[std::size_t(i)], 1));
    CHECK(frobenius_point(fp, F4, 1) == p); // order 2 over F4
}

TEST_CASE("normalization", "[engine]") {
    const FiniteField& F4 = make_field(2, 2);
    Pt6 p{0, 2, 3, 0, 1, 2};
    Pt6 n = normalize_point(p, F4);
    CHECK(n[0] == 0);
    CHECK(n[1] == 1); // leading nonzero scaled to 1
    CHECK(n[2] == F4.mul(3, F4.inv(2)));
    CHECK_THROWS_AS(normalize_point(Pt6{}, F4), std::invalid_argument);
}

TEST_CASE("plane sections enumerate ternary loci", "[engine]") {
    const FiniteField& F8 = make_field(2, 3);
    std::array<Tri6, 3> none{};
    CHECK(plane_zero_locus(none, F8).size() == 73); // all of P^2(F8)
    // x0^2 = 0 cuts the line x0 = 0: q + 1 = 9 points
    std::array<Tri6, 3> sq{};
    sq[0][0] = 1; // coefficient of x0^2 in the (00,01,02,11,12,22) layout
    CHECK(plane_zero_locus(sq, F8).size() == 9);
}

TEST_CASE("budget guard", "[engine]") {
    const FiniteField& F16 = make_field(2, 4);
    CHECK_THROWS_AS(PointEnum(F16, 1000), std::invalid_argument); // 1118481 > 1000
    CHECK_NOTHROW(PointEnum(F16, 2000000));
}
