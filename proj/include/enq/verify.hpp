#pragma once

// Candidate verification: run the acceptance checks in cheap-first order and
// assemble the full report.  A candidate is accepted when every check holds;
// the first failing check names the rejection reason (checks only accumulate
// with the extension bound, so a rejection at level t stands for any larger
// bound).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "enq/surface.hpp"

namespace enq {

struct VerifyOptions {
    int k_smooth = 3;     // smoothness scan up to this tower level
    int k_plane = 4;      // plane avoidance up to this tower level
    int k_psi = 3;        // quotient-map checks up to this tower level
    unsigned nthreads = 0;
    unsigned long long budget = DEFAULT_POINT_BUDGET;
};

struct VerificationReport {
    bool rank_ok = false;
    bool invariance_ok = false;
    std::array<int, 7> hilbert_dims{}; // degrees 0..6; -1 = not computed
    bool hilbert_ok = false;
    bool plus_clear = false, minus_clear = false;
    int plane_max_ext = 0;
    std::map<int, unsigned long long> smooth_checked; // level -> points scanned
    std::vector<std::pair<int, Pt6>> singular_points; // (level, point)
    std::map<int, PointCounts> point_counts;          // level -> (cover, quotient)
    bool weil_ok = false;
    bool psi_ok = false;
    std::string status; // "accepted" or "rejected(<reason>)"
    bool accepted = false;
};

// Largest t with q^t <= 16 (the window where the count bound is asserted).
inline int count_window(const FiniteField& F) {
    unsigned long long q = F.q(), v = q;
    int t = 0;
    while (v <= 16) { ++t; v *= q; }
    return t;
}

inline VerificationReport verify_candidate(const QuadricSystem& sys,
                                           const VerifyOptions& opt = {}) {
    VerificationReport rep;
    rep.hilbert_dims.fill(-1);
    auto reject = [&rep](const std::string& reason) -> VerificationReport& {
        rep.status = "rejected(" + reason + ")";
        return rep;
    };

    rep.rank_ok = coeff_rank(sys) == 3;
    if (!rep.rank_ok) return reject("rank");

    {
        auto gp = sys.params();
        rep.invariance_ok = true;
        for (auto& q : sys.quads)
            rep.invariance_ok =
                rep.invariance_ok && check_invariance(quad_to_poly(q, *sys.field), gp);
        if (!rep.invariance_ok) return reject("invariance");
    }

    rep.plane_max_ext = opt.k_plane;
    for (int t = 1; t <= opt.k_plane; ++t) {
        if (!plane_section(sys, true, t).empty()) return reject("plane_plus_t" + std::to_string(t));
        if (!plane_section(sys, false, t).empty()) return reject("plane_minus_t" + std::to_string(t));
    }
    rep.plus_clear = rep.minus_clear = true;

    rep.hilbert_ok = true;
    for (int d = 0; d <= 6; ++d) {
        rep.hilbert_dims[std::size_t(d)] = hilbert_slice_dim(sys, d);
        if (rep.hilbert_dims[std::size_t(d)] != CI_SERIES[std::size_t(d)]) {
            rep.hilbert_ok = false;
            return reject("hilbert_d" + std::to_string(d));
        }
    }

    for (int t = 1; t <= opt.k_smooth; ++t) {
        TowerView v = tower_view(sys, t);
        auto pts = zero_locus(v.quads, *v.big, opt.nthreads, opt.budget);
        rep.smooth_checked[t] = pts.size();
        for (auto& pt : pts)
            if (jacobian_rank(v, pt) < 3) rep.singular_points.emplace_back(t, pt);
        if (!rep.singular_points.empty()) return reject("singular_t" + std::to_string(t));
    }

    const int kmax = count_window(*sys.field);
    rep.weil_ok = true;
    unsigned long long qt = 1;
    for (int t = 1; t <= kmax; ++t) {
        qt *= sys.field->q();
        rep.point_counts[t] = count_quotient_points(sys, t, opt.nthreads, opt.budget);
        if (!weil_window_ok(rep.point_counts[t].quotient, qt)) {
            rep.weil_ok = false;
            return reject("weil_t" + std::to_string(t));
        }
    }

    // Quotient-map checks.  For the order-2 separable action: psi constant on
    // orbits, fibers of size <= 2 that are exactly the orbits.  For the
    // infinitesimal types sigma is trivial on points and the quotient is a
    // point-level bijection, so psi must be injective on rational points.
    GroupType gt = sys.type();
    bool separable = (gt == GroupType::Etale2 || gt == GroupType::MixedOrdinary);
    rep.psi_ok = true;
    for (int t = 1; t <= std::min(opt.k_psi, kmax) && rep.psi_ok; ++t) {
        TowerView v = tower_view(sys, t);
        auto pts = zero_locus(v.quads, *v.big, opt.nthreads, opt.budget);
        std::map<Pt12, std::vector<Pt6>> fibers;
        for (auto& p : pts) fibers[quotient_point(v, p)].push_back(p);
        if (separable) {
            for (auto& p : pts) {
                Pt6 sp = sigma_point(v, p);
                if (quotient_point(v, p) != quotient_point(v, sp)) { rep.psi_ok = false; break; }
            }
            for (auto& kv : fibers) {
                auto& fib = kv.second;
                if (fib.size() > 2) { rep.psi_ok = false; break; }
                if (fib.size() == 2 && sigma_point(v, fib[0]) != fib[1]) { rep.psi_ok = false; break; }
            }
        } else {
            for (auto& kv : fibers)
                if (kv.second.size() != 1) { rep.psi_ok = false; break; }
        }
        if (!rep.psi_ok) return reject("psi_t" + std::to_string(t));
    }

    rep.accepted = true;
    rep.status = "accepted";
    return rep;
}

} // namespace enq
