// Acceptance gate: one check per shipped guarantee, one PASS/FAIL line each.
// Runs the full pipeline (symbolic identities, invariant dimensions, pinned
// campaigns, quotient/count suites, lattice arithmetic, engine equivalence)
// and exits nonzero if anything fails, including the runtime ceilings.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "enq/campaign.hpp"
#include "enq/lattice.hpp"

using namespace enq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double took(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int criterion, bool ok, double secs, double limit, const std::string& what) {
    bool in_time = limit <= 0 || secs <= limit;
    bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d: %s (%.2fs%s) %s\n", criterion, pass ? "PASS" : "FAIL", secs,
                limit > 0 ? (" / limit " + std::to_string(int(limit)) + "s").c_str() : "",
                what.c_str());
    if (ok && !in_time) std::printf("  -> checks held but exceeded the runtime ceiling\n");
    std::fflush(stdout);
}

// 1. symbolic invariance of the 12 quadrics, universal and specialized
void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    auto ugp = universal_params();
    for (auto& q : invariant_basis(ugp)) ok = ok && check_invariance(q, ugp);
    const FiniteField& F2 = make_field(2, 1);
    const FiniteField& F3 = make_field(3, 1);
    for (auto [F, a, b] : {std::tuple<const FiniteField*, uint32_t, uint32_t>{&F2, 1, 0},
                           {&F2, 0, 1},
                           {&F2, 0, 0},
                           {&F3, 1, 2}}) {
        auto gp = field_params(*F, a, b);
        for (auto& q : invariant_basis(gp)) ok = ok && check_invariance(q, gp);
    }
    line(1, ok, took(t0), 1.0, "12 invariant quadrics, universal ring + 4 specializations");
}

// 2. the composition law and its 2-dimensional representation, symbolically
void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    using P1 = PointRingElt<Sym>;
    using P2 = PointRingElt<P1>;
    Sym a = Sym::gen_a(), b = Sym::gen_b(), one(1);
    P1 s1 = P1::gen(a, one);
    P2 s = P2(s1), t = P2::gen(P1(a), P1(one));
    P2 pa = P2(P1(a)), pb = P2(P1(b)), pone = P2(P1(one));

    P2 m = group_law(s, t, pa, pb);
    ok = ok && (m * m == pa * m);                                   // closure
    auto prod = mat2_mul(regular_representation(s, pa, pb, pone),
                         regular_representation(t, pa, pb, pone)); // homomorphism
    auto rm = regular_representation(m, pa, pb, pone);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            ok = ok && prod[std::size_t(i)][std::size_t(j)] == rm[std::size_t(i)][std::size_t(j)];
    P2 zero{};
    ok = ok && group_law(s, zero, pa, pb) == s;                     // identity
    P1 self = s1 + s1 - P1(b) * s1 * s1;                            // self-inverse
    ok = ok && self.c0().is_zero() && self.c1().is_zero();
    P1 u = P1(one) - P1(b) * s1;
    ok = ok && u * u == P1(one);                                    // unit square
    line(2, ok, took(t0), 1.0, "group law, representation homomorphism, unit identities");
}

// 3. degree-2 invariants have dimension 12; degree-4 invariants are generated
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    const FiniteField& F2 = make_field(2, 1);
    for (auto [a, b] : {std::pair<uint32_t, uint32_t>{1, 0}, {0, 1}, {0, 0}}) {
        auto gp = field_params(F2, a, b);
        auto d2 = even_invariant_dims(gp, 2);
        ok = ok && d2.first == 12 && d2.second == 12;
        ok = ok && even_invariants_generated(gp, 4);
    }
    line(3, ok, took(t0), 10.0, "even invariants: dim 12 at degree 2, generated at degree 4");
}

struct CampaignOutcome {
    std::vector<CatalogEntry> accepted;
    bool ok = true;
    double secs = 0;
    std::string summary;
};

// 5. pinned-window campaigns accept at least one candidate per group type
CampaignOutcome run_pinned_campaigns() {
    auto t0 = Clock::now();
    CampaignOutcome out;
    struct Window { uint32_t p; GroupType gt; uint64_t lo, hi; };
    // windows of 200 seeds, positioned by the build-time scan
    const Window windows[] = {{2, GroupType::Etale2, 0, 200},
                              {2, GroupType::Mu2, 0, 200},
                              {2, GroupType::Alpha2, 600, 800},
                              {3, GroupType::MixedOrdinary, 0, 200}};
    std::string got;
    for (auto& w : windows) {
        CampaignConfig cfg;
        cfg.p = w.p;
        cfg.groups = {w.gt};
        cfg.seed_lo = w.lo;
        cfg.seed_hi = w.hi;
        cfg.target = 1;
        CampaignResult res = run_campaign(cfg);
        auto& tally = res.tallies.at(w.gt);
        out.ok = out.ok && tally.accepted >= 1 &&
                 tally.accepted + [&] {
                     uint64_t r = 0;
                     for (auto& kv : tally.rejections) r += kv.second;
                     return r;
                 }() == tally.attempted;
        for (auto& e : res.catalog)
            if (e.report.accepted) out.accepted.push_back(e);
        got += std::string(got.empty() ? "" : ", ") + group_type_name(w.gt) + ":" +
               std::to_string(tally.accepted) + "/" + std::to_string(tally.attempted);
    }
    out.secs = took(t0);
    out.summary = got;
    return out;
}

void criterion5(const CampaignOutcome& camp) {
    line(5, camp.ok, camp.secs, 300.0,
         "pinned 200-seed windows accept every group type (" + camp.summary + ")");
}

// 4. accepted candidates sit on the complete-intersection Hilbert series
void criterion4(const CampaignOutcome& camp) {
    auto t0 = Clock::now();
    bool ok = camp.ok && !camp.accepted.empty();
    for (auto& e : camp.accepted) {
        for (int d = 1; d <= 6; ++d)
            ok = ok && e.report.hilbert_dims[std::size_t(d)] == CI_SERIES[std::size_t(d)];
        ok = ok && is_complete_intersection(e.sys);
    }
    line(4, ok, took(t0), 0, "graded dimensions (6, 18, 38, 66, 102, 146) for every acceptance");
}

// 6. etale quotient structure: psi constant on orbits, fibers <= 2, planes clear
void criterion6(const CampaignOutcome& camp) {
    auto t0 = Clock::now();
    bool ok = true;
    int candidates = 0;
    double worst = 0;
    for (auto& e : camp.accepted) {
        if (e.sys.type() != GroupType::Etale2) continue;
        auto c0 = Clock::now();
        ++candidates;
        for (int t = 1; t <= 3; ++t) {
            TowerView v = tower_view(e.sys, t);
            auto pts = rational_points(e.sys, t);
            std::map<Pt12, std::vector<Pt6>> fibers;
            for (auto& p : pts) {
                ok = ok && quotient_point(v, p) == quotient_point(v, sigma_point(v, p));
                fibers[quotient_point(v, p)].push_back(p);
            }
            for (auto& kv : fibers) ok = ok && kv.second.size() <= 2;
        }
        PlaneCheck pc = fixed_plane_check(e.sys, 4);
        ok = ok && pc.plus_clear && pc.minus_clear;
        worst = std::max(worst, took(c0));
    }
    ok = ok && candidates > 0 && worst <= 60.0;
    line(6, ok, took(t0), 0,
         "etale quotient: psi(p) = psi(sigma p), fibers <= 2, planes clear (" +
             std::to_string(candidates) + " candidate(s), worst " + std::to_string(worst).substr(0, 4) +
             "s <= 60s each)");
}

// 7. quotient counts stay inside the Weil-type window wherever q^k <= 16
void criterion7(const CampaignOutcome& camp) {
    auto t0 = Clock::now();
    bool ok = !camp.accepted.empty();
    int checked = 0;
    for (auto& e : camp.accepted) {
        unsigned long long q = e.sys.field->q(), qt = 1;
        for (int t = 1; qt * q <= 16; ++t) {
            qt *= q;
            PointCounts c = count_quotient_points(e.sys, t);
            ok = ok && weil_window_ok(c.quotient, qt);
            ok = ok && e.report.point_counts.count(t) == 1 &&
                 e.report.point_counts.at(t).quotient == c.quotient;
            ++checked;
        }
    }
    line(7, ok, took(t0), 0,
         "|count - 1 - q^2k| <= 10 q^k at " + std::to_string(checked) + " tower levels");
}

// 8. lattice arithmetic: unimodular hyperbolic form, weight, phi, orbit count
void criterion8() {
    auto t0 = Clock::now();
    bool ok = det_gram() == -1 && lattice_signature() == std::make_pair(1, 9);
    Vec10 w1 = fundamental_weight(1);
    auto roots = simple_roots();
    for (int l = 0; l <= 9; ++l)
        ok = ok && pairing(w1, roots[vertex_index(l)]) == (l == 1 ? 1 : 0);
    ok = ok && pairing(w1, w1) == 4;
    PhiResult ph = phi(w1, 3);
    ok = ok && ph.resolved && ph.value == 2;
    try {
        OrbitCount oc = orbit_count_check();
        ok = ok && oc.quotient == 252960 && oc.weyl_d9 == 92897280ULL;
    } catch (const std::exception&) {
        ok = false;
    }
    line(8, ok, took(t0), 10.0,
         "det -1, signature (1,9), weight pairings, norm 4, phi = 2, orbit count 252960");
}

// 9. batch evaluator == naive oracle; parallel == serial, byte for byte
void criterion9() {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto [p, k] : {std::pair<uint32_t, int>{2, 1}, {2, 2}}) {
        const FiniteField& F = make_field(p, k);
        for (uint64_t seed = 0; seed < 10; ++seed) {
            QuadricSystem sys = sample_system(F, 1, 0, seed);
            auto batch = zero_locus(sys.quads, F, 1);
            ok = ok && batch == zero_locus_naive(sys.quads, F);
            ok = ok && batch == zero_locus(sys.quads, F, 4);
            ok = ok && batch == zero_locus(sys.quads, F, 0);
        }
    }
    line(9, ok, took(t0), 0, "20 random systems over F2/F4: batch == naive, parallel == serial");
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    CampaignOutcome camp = run_pinned_campaigns(); // criteria 4-7 share its acceptances
    criterion4(camp);
    criterion5(camp);
    criterion6(camp);
    criterion7(camp);
    criterion8();
    criterion9();
    std::printf("acceptance: %s (%d failure%s, %.1fs total)\n", failures == 0 ? "PASS" : "FAIL",
                failures, failures == 1 ? "" : "s", took(t0));
    return failures == 0 ? 0 : 1;
}
