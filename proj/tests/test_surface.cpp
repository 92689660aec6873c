#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "enq/surface.hpp"

using namespace enq;

namespace {

using Coeffs = std::array<std::array<uint32_t, 12>, 3>;

// fixture systems (coefficient rows index the 12-quadric basis)
const Coeffs ALPHA2_FIX{{{1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1},
                         {1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
                         {1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0}}};
const Coeffs ETALE2_FIX{{{0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0},
                         {0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1},
                         {1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0}}};
const Coeffs CHAR3_FIX{{{1, 1, 0, 0, 0, 0, 1, 1, 2, 2, 0, 0},
                        {2, 2, 2, 2, 0, 1, 0, 1, 0, 0, 2, 1},
                        {0, 1, 1, 0, 0, 2, 1, 2, 1, 0, 0, 0}}};

} // namespace

TEST_CASE("sampling is deterministic and rank 3", "[surface]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem s1 = sample_system(F2, 1, 0, 42);
    QuadricSystem s2 = sample_system(F2, 1, 0, 42);
    CHECK(s1.coeffs == s2.coeffs);
    CHECK(s1.seed == 42);
    CHECK(coeff_rank(s1) == 3);
    CHECK(s1.type() == GroupType::Etale2);
    QuadricSystem s3 = sample_system(F2, 1, 0, 43);
    CHECK(s1.coeffs != s3.coeffs);

    CHECK_THROWS_AS(sample_system(F2, 1, 1, 0), std::invalid_argument); // ab != 2
    const FiniteField& F3 = make_field(3, 1);
    CHECK_THROWS_AS(system_from_coeffs(F3, 1, 2, Coeffs{{{3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                         {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                         {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}}),
                    std::invalid_argument); // coefficient code out of range
}

TEST_CASE("expanded quadrics match the invariant-basis combination", "[surface]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem sys = system_from_coeffs(F2, 0, 0, ALPHA2_FIX);
    auto basis = invariant_basis_quads(F2, 0, 0);
    for (int r = 0; r < 3; ++r) {
        Quad21 want{};
        for (int i = 0; i < 12; ++i)
            if (sys.coeffs[std::size_t(r)][std::size_t(i)])
                for (int m = 0; m < 21; ++m)
                    want[std::size_t(m)] = F2.add(
                        want[std::size_t(m)],
                        F2.mul(sys.coeffs[std::size_t(r)][std::size_t(i)], basis[std::size_t(i)][std::size_t(m)]));
        CHECK(sys.quads[std::size_t(r)] == want);
    }
    // quad <-> polynomial round trip
    for (auto& q : sys.quads) CHECK(poly_to_quad(quad_to_poly(q, F2)) == q);
}

TEST_CASE("graded dimensions of the accepted fixture", "[surface][hilbert]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem sys = system_from_coeffs(F2, 0, 0, ALPHA2_FIX);
    for (int d = 0; d <= 8; ++d) CHECK(hilbert_slice_dim(sys, d) == CI_SERIES[std::size_t(d)]);
    CHECK(is_complete_intersection(sys));
    CHECK(is_complete_intersection(sys, 8));
    CHECK_THROWS_AS(hilbert_slice_dim(sys, 9), std::invalid_argument);

    // a rank-deficient system is not a complete intersection
    QuadricSystem dup = system_from_coeffs(
        F2, 0, 0,
        Coeffs{{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}});
    CHECK(hilbert_slice_dim(dup, 4) > CI_SERIES[4]);
    CHECK_FALSE(is_complete_intersection(dup));
}

TEST_CASE("alpha2 fixture: counts, planes, smoothness", "[surface][fixture]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem sys = system_from_coeffs(F2, 0, 0, ALPHA2_FIX);

    const unsigned long long cover[5] = {0, 3, 37, 57, 337};
    for (int t = 1; t <= 4; ++t) {
        CHECK(rational_points(sys, t).size() == cover[t]);
        PointCounts c = count_quotient_points(sys, t);
        CHECK(c.cover == cover[t]);
        CHECK(c.quotient == cover[t]); // purely inseparable quotient: same point set
        unsigned long long qt = 1ULL << t;
        CHECK(weil_window_ok(c.quotient, qt));
    }
    for (int t = 1; t <= 4; ++t) {
        CHECK(plane_section(sys, true, t).empty());
        CHECK(plane_section(sys, false, t).empty());
    }
    PlaneCheck pc = fixed_plane_check(sys, 4);
    CHECK(pc.plus_clear);
    CHECK(pc.minus_clear);
    for (int t = 1; t <= 3; ++t) CHECK(smoothness_check(sys, t).empty());
}

TEST_CASE("etale2 fixture: separable quotient counting", "[surface][fixture]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem sys = system_from_coeffs(F2, 1, 0, ETALE2_FIX);

    const unsigned long long cover[5] = {0, 6, 34, 54, 242};
    const unsigned long long fixed[5] = {0, 8, 8, 92, 304};
    const unsigned long long quot[5] = {0, 7, 21, 73, 273};
    for (int t = 1; t <= 4; ++t) {
        CHECK(count_sigma_frobenius_fixed(sys, t) == fixed[t]);
        PointCounts c = count_quotient_points(sys, t);
        CHECK(c.cover == cover[t]);
        CHECK(c.quotient == quot[t]);
        CHECK(c.quotient == (cover[t] + fixed[t]) / 2);
    }
}

TEST_CASE("char-3 fixture: ordinary quotient counting", "[surface][fixture]") {
    const FiniteField& F3 = make_field(3, 1);
    QuadricSystem sys = system_from_coeffs(F3, 1, 2, CHAR3_FIX);
    CHECK(sys.type() == GroupType::MixedOrdinary);

    PointCounts c1 = count_quotient_points(sys, 1);
    CHECK(c1.cover == 13);
    CHECK(c1.quotient == 13);
    CHECK(count_sigma_frobenius_fixed(sys, 1) == 13);
    PointCounts c2 = count_quotient_points(sys, 2);
    CHECK(c2.cover == 97);
    CHECK(count_sigma_frobenius_fixed(sys, 2) == 85);
    CHECK(c2.quotient == 91);
}

TEST_CASE("tower views specialize the unit correctly", "[surface]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem se = system_from_coeffs(F2, 1, 0, ETALE2_FIX);
    TowerView v2 = tower_view(se, 2);
    CHECK(v2.big->q() == 4);
    CHECK(v2.u == 1); // 1 - ba = 1 in characteristic 2

    const FiniteField& F3 = make_field(3, 1);
    QuadricSystem s3 = system_from_coeffs(F3, 1, 2, CHAR3_FIX);
    TowerView v3 = tower_view(s3, 1);
    CHECK(v3.u == 2); // 1 - 2*1 = -1
    // sigma is an involution on the cover's points
    for (auto& p : rational_points(s3, 1)) {
        Pt6 sp = sigma_point(v3, p);
        CHECK(sigma_point(v3, sp) == p);
    }
}

TEST_CASE("fixed locus of sigma in the ambient space", "[surface][sigma]") {
    // char 2, etale type: y_i -> a x_i + y_i is unipotent, so the only plane
    // of fixed points is {x = 0}; {y = 0} moves ((x,0) -> (x,ax)).
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem s2 = system_from_coeffs(F2, 1, 0, ETALE2_FIX);
    for (int t = 1; t <= 2; ++t) {
        TowerView v = tower_view(s2, t);
        const FiniteField& F = *v.big;
        uint64_t fixed = 0;
        PointEnum en(F);
        en.for_each(0, en.size(), [&](const Pt6& p, unsigned long long) {
            bool x_zero = p[0] == 0 && p[1] == 0 && p[2] == 0;
            bool is_fixed = sigma_point(v, p) == p;
            CHECK(is_fixed == x_zero);
            if (is_fixed) ++fixed;
        });
        CHECK(fixed == F.q() * F.q() + F.q() + 1); // one P^2(F_q)
    }

    // odd characteristic: sigma is diagonalizable, so the fixed locus is the
    // union of the two eigenplanes {x = 0} and {y_i = (a/2) x_i}.
    const FiniteField& F3 = make_field(3, 1);
    QuadricSystem s3 = system_from_coeffs(F3, 1, 2, CHAR3_FIX);
    TowerView v3 = tower_view(s3, 1);
    const FiniteField& F = *v3.big;
    const uint32_t half_a = F.mul(v3.a, F.inv(F.from_int(2)));
    uint64_t fixed = 0;
    PointEnum en(F);
    en.for_each(0, en.size(), [&](const Pt6& p, unsigned long long) {
        bool x_zero = p[0] == 0 && p[1] == 0 && p[2] == 0;
        bool tilted = true;
        for (int i = 0; i < 3; ++i)
            tilted = tilted && p[std::size_t(3 + i)] == F.mul(half_a, p[std::size_t(i)]);
        bool is_fixed = sigma_point(v3, p) == p;
        CHECK(is_fixed == (x_zero || tilted));
        if (is_fixed) ++fixed;
    });
    CHECK(fixed == 2 * (F.q() * F.q() + F.q() + 1)); // two disjoint planes
}

TEST_CASE("quotient map collapses exactly the orbits", "[surface][psi]") {
    const FiniteField& F2 = make_field(2, 1);
    QuadricSystem sys = system_from_coeffs(F2, 1, 0, ETALE2_FIX);
    for (int t = 1; t <= 3; ++t) {
        TowerView v = tower_view(sys, t);
        auto pts = rational_points(sys, t);
        std::map<Pt12, std::vector<Pt6>> fibers;
        for (auto& p : pts) {
            CHECK(quotient_point(v, p) == quotient_point(v, sigma_point(v, p)));
            fibers[quotient_point(v, p)].push_back(p);
        }
        for (auto& kv : fibers) {
            REQUIRE(kv.second.size() <= 2);
            if (kv.second.size() == 2) CHECK(sigma_point(v, kv.second[0]) == kv.second[1]);
        }
    }
}

TEST_CASE("quotient map is injective for infinitesimal types", "[surface][psi]") {
    const FiniteField& F2 = make_field(2, 1);
    for (auto [a, b, fix] : {std::tuple<uint32_t, uint32_t, const Coeffs*>{0, 0, &ALPHA2_FIX}}) {
        QuadricSystem sys = system_from_coeffs(F2, a, b, *fix);
        for (int t = 1; t <= 3; ++t) {
            TowerView v = tower_view(sys, t);
            auto pts = rational_points(sys, t);
            std::set<Pt12> images;
            for (auto& p : pts) images.insert(quotient_point(v, p));
            CHECK(images.size() == pts.size());
        }
    }
}

TEST_CASE("quotient coordinates have no common zero", "[surface][psi]") {
    // the 12 invariants cut out the empty set: psi is defined on all of P^5
    const FiniteField& F4 = make_field(2, 2);
    for (auto [a, b] : {std::pair<uint32_t, uint32_t>{1, 0}, {0, 1}, {0, 0}}) {
        auto quads = invariant_basis_quads(F4, a, b);
        PointEnum en(F4);
        std::size_t common = 0;
        en.for_each(0, en.size(), [&](const Pt6& pt, unsigned long long) {
            for (auto& q : quads)
                if (eval_quad(q, pt, F4) != 0) return;
            ++common;
        });
        CHECK(common == 0);
    }
}

TEST_CASE("weil window edges", "[surface]") {
    CHECK(weil_window_ok(1 + 4 + 20, 2));       // +10q exactly
    CHECK(weil_window_ok(1 + 4 - 5, 2));        // small side
    CHECK_FALSE(weil_window_ok(1 + 4 + 21, 2)); // one past the window
    CHECK_FALSE(weil_window_ok(0, 16));         // 257 below the center
}
