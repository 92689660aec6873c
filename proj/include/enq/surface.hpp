#pragma once

// The construction pipeline: sample three invariant quadrics over a finite
// field (a point of Grass(3,12)), certify the complete-intersection and
// smoothness/freeness conditions at rational points, and count points of
// the cover and of its quotient under the group action.
//
// Conventions fixed here and used by the CLI and the catalogs:
//   * the 3x12 coefficient matrix is sampled row-major with next() % q from
//     a SplitMix64 stream seeded by the candidate seed, resampling the whole
//     matrix until it has rank 3;
//   * extension fields of the base F_q (q = p^k) are F_{p^{k*t}} for tower
//     level t, with coefficients carried through the subfield embedding;
//   * all point lists are in the canonical enumeration order of projective
//     space, so reports are identical across runs and thread counts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enq/fields.hpp"
#include "enq/group_scheme.hpp"
#include "enq/linalg.hpp"
#include "enq/polynomial.hpp"
#include "enq/prng.hpp"
#include "enq/projective.hpp"

namespace enq {

// Coefficients of 1/( (1-t)^6 / (1-t^2)^3 ): the graded dimensions of a
// complete intersection of three quadrics in P^5, degrees 0..8.
inline constexpr std::array<int, 9> CI_SERIES = {1, 6, 18, 38, 66, 102, 146, 198, 258};

struct QuadricSystem {
    const FiniteField* field = nullptr;
    std::uint32_t a_code = 0, b_code = 0;
    std::array<std::array<std::uint32_t, 12>, 3> coeffs{};
    std::array<Quad21, 3> quads{};
    std::uint64_t seed = 0;

    GroupParams<FieldElement> params() const {
        return field_params(*field, a_code, b_code);
    }
    GroupType type() const { return classify(params()); }
};

// The 12 invariant quadrics over F as packed coefficient vectors, in the
// documented basis order.
inline std::array<Quad21, 12> invariant_basis_quads(const FiniteField& F, std::uint32_t a_code,
                                                    std::uint32_t b_code) {
    auto basis = invariant_basis(field_params(F, a_code, b_code));
    std::array<Quad21, 12> out{};
    for (int i = 0; i < 12; ++i) out[std::size_t(i)] = poly_to_quad(basis[std::size_t(i)]);
    return out;
}

inline std::array<Quad21, 3> expand_coeffs(const FiniteField& F, std::uint32_t a_code,
                                           std::uint32_t b_code,
                                           const std::array<std::array<std::uint32_t, 12>, 3>& coeffs) {
    auto basis = invariant_basis_quads(F, a_code, b_code);
    std::array<Quad21, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < 12; ++i) {
            std::uint32_t c = coeffs[std::size_t(r)][std::size_t(i)];
            if (c == 0) continue;
            for (int t = 0; t < 21; ++t) {
                std::uint32_t b = basis[std::size_t(i)][std::size_t(t)];
                if (b != 0)
                    out[std::size_t(r)][std::size_t(t)] =
                        F.add(out[std::size_t(r)][std::size_t(t)], F.mul(c, b));
            }
        }
    return out;
}

inline std::size_t coeff_rank(const QuadricSystem& sys) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto& r : sys.coeffs) rows.emplace_back(r.begin(), r.end());
    return rank_codes(std::move(rows), *sys.field);
}

// Deterministic rank-3 sample from the seed.
inline QuadricSystem sample_system(const FiniteField& F, std::uint32_t a_code,
                                   std::uint32_t b_code, std::uint64_t seed) {
    (void)field_params(F, a_code, b_code); // validates a*b = 2
    QuadricSystem sys;
    sys.field = &F;
    sys.a_code = a_code;
    sys.b_code = b_code;
    sys.seed = seed;
    SplitMix64 rng(seed);
    for (;;) {
        for (int r = 0; r < 3; ++r)
            for (int i = 0; i < 12; ++i)
                sys.coeffs[std::size_t(r)][std::size_t(i)] =
                    static_cast<std::uint32_t>(rng.next() % F.q());
        if (coeff_rank(sys) == 3) break;
    }
    sys.quads = expand_coeffs(F, a_code, b_code, sys.coeffs);
    return sys;
}

// System from explicit coefficients (catalog reload, fixtures).
inline QuadricSystem system_from_coeffs(const FiniteField& F, std::uint32_t a_code,
                                        std::uint32_t b_code,
                                        const std::array<std::array<std::uint32_t, 12>, 3>& coeffs,
                                        std::uint64_t seed = 0) {
    (void)field_params(F, a_code, b_code);
    QuadricSystem sys;
    sys.field = &F;
    sys.a_code = a_code;
    sys.b_code = b_code;
    sys.coeffs = coeffs;
    sys.seed = seed;
    for (auto& row : coeffs)
        for (auto c : row)
            if (c >= F.q()) throw std::invalid_argument("coefficient code out of field range");
    sys.quads = expand_coeffs(F, a_code, b_code, coeffs);
    return sys;
}

// ---- graded structure ------------------------------------------------------

// dim of the degree-d slice of the quotient by (Q1,Q2,Q3): monomial count
// minus the rank of { m * Q_i : deg m = d-2 }.
inline int hilbert_slice_dim(const QuadricSystem& sys, int d) {
    if (d < 0 || d > 8) throw std::invalid_argument("hilbert_slice_dim: need 0 <= d <= 8");
    auto mons_d = monomials_of_degree(d);
    if (d < 2) return static_cast<int>(mons_d.size());
    auto mons_lo = monomials_of_degree(d - 2);
    const FiniteField& F = *sys.field;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(3 * mons_lo.size());
    const auto& pairs = mon2_pairs();
    for (auto& q : sys.quads) {
        for (auto& m : mons_lo) {
            std::vector<std::uint32_t> row(mons_d.size(), 0);
            for (int t = 0; t < 21; ++t) {
                std::uint32_t c = q[std::size_t(t)];
                if (c == 0) continue;
                auto [i, j] = pairs[std::size_t(t)];
                Exp6 e = m;
                e[std::size_t(i)] = static_cast<std::uint8_t>(e[std::size_t(i)] + 1);
                e[std::size_t(j)] = static_cast<std::uint8_t>(e[std::size_t(j)] + 1);
                auto it = std::lower_bound(mons_d.begin(), mons_d.end(), e, GradedLexLess{});
                std::size_t col = std::size_t(it - mons_d.begin());
                row[col] = F.add(row[col], c);
            }
            rows.push_back(std::move(row));
        }
    }
    return static_cast<int>(mons_d.size()) - static_cast<int>(row_reduce(rows, F));
}

inline bool is_complete_intersection(const QuadricSystem& sys, int dmax = 6) {
    for (int d = 0; d <= dmax; ++d)
        if (hilbert_slice_dim(sys, d) != CI_SERIES[std::size_t(d)]) return false;
    return true;
}

// ---- extensions and points -------------------------------------------------

struct TowerView {
    const FiniteField* big = nullptr;
    std::array<Quad21, 3> quads{};     // system embedded upstairs
    std::uint32_t a = 0, b = 0, u = 0; // embedded params; u = 1 - b*a
};

inline Quad21 embed_quad(const Quad21& q, const std::vector<std::uint32_t>& emb) {
    Quad21 out{};
    for (int t = 0; t < 21; ++t) out[std::size_t(t)] = emb[q[std::size_t(t)]];
    return out;
}

inline TowerView tower_view(const QuadricSystem& sys, int t) {
    if (t < 1) throw std::invalid_argument("tower level must be >= 1");
    const FiniteField& F = *sys.field;
    TowerView v;
    v.big = &make_field(F.p(), F.k() * unsigned(t));
    auto emb = embed_field(F, *v.big);
    for (int r = 0; r < 3; ++r) v.quads[std::size_t(r)] = embed_quad(sys.quads[std::size_t(r)], emb);
    v.a = emb[sys.a_code];
    v.b = emb[sys.b_code];
    v.u = v.big->add(1, v.big->neg(v.big->mul(v.b, v.a)));
    return v;
}

inline std::vector<Pt6> rational_points(const QuadricSystem& sys, int t, unsigned nthreads = 0,
                                        unsigned long long budget = DEFAULT_POINT_BUDGET) {
    TowerView v = tower_view(sys, t);
    return zero_locus(v.quads, *v.big, nthreads, budget);
}

// The order-2 map sigma induced by the group point s0 = a on coordinates:
// x fixed, y_i -> a*x_i + u*y_i with u = 1 - b*a.
inline Pt6 sigma_point(const TowerView& v, const Pt6& pt) {
    const FiniteField& F = *v.big;
    Pt6 out = pt;
    for (int i = 0; i < 3; ++i)
        out[std::size_t(3 + i)] =
            F.add(F.mul(v.a, pt[std::size_t(i)]), F.mul(v.u, pt[std::size_t(3 + i)]));
    return normalize_point(out, F);
}

// Jacobian rank of the three quadrics at a point (char-aware derivative:
// the diagonal term carries a factor 2).
inline std::size_t jacobian_rank(const TowerView& v, const Pt6& pt) {
    const FiniteField& F = *v.big;
    const std::uint32_t two = F.from_int(2);
    std::vector<std::vector<std::uint32_t>> J(3, std::vector<std::uint32_t>(6, 0));
    for (int r = 0; r < 3; ++r) {
        const Quad21& q = v.quads[std::size_t(r)];
        for (int var = 0; var < 6; ++var) {
            std::uint32_t acc = 0;
            for (int j = 0; j < 6; ++j) {
                std::uint32_t c = q[std::size_t(mon2_index(var, j))];
                if (c == 0) continue;
                std::uint32_t w = (j == var) ? F.mul(two, c) : c;
                acc = F.add(acc, F.mul(w, pt[std::size_t(j)]));
            }
            J[std::size_t(r)][std::size_t(var)] = acc;
        }
    }
    return row_reduce(J, F);
}

// Singular points among the rational points at tower level t (canonical order).
inline std::vector<Pt6> smoothness_check(const QuadricSystem& sys, int t, unsigned nthreads = 0,
                                         unsigned long long budget = DEFAULT_POINT_BUDGET) {
    TowerView v = tower_view(sys, t);
    std::vector<Pt6> bad;
    for (auto& pt : zero_locus(v.quads, *v.big, nthreads, budget))
        if (jacobian_rank(v, pt) < 3) bad.push_back(pt);
    return bad;
}

// X intersected with a distinguished plane, as points of P^2 over the
// level-t extension; empty lists certify freeness of the action there.
inline std::vector<Pt3> plane_section(const QuadricSystem& sys, bool plus_plane, int t) {
    const FiniteField& F = *sys.field;
    const FiniteField& big = make_field(F.p(), F.k() * unsigned(t));
    auto emb = embed_field(F, big);
    std::array<Tri6, 3> tri{};
    for (int r = 0; r < 3; ++r) {
        Tri6 small = restrict_quad(sys.quads[std::size_t(r)], plus_plane);
        for (int i = 0; i < 6; ++i) tri[std::size_t(r)][std::size_t(i)] = emb[small[std::size_t(i)]];
    }
    return plane_zero_locus(tri, big);
}

struct PlaneCheck {
    bool plus_clear = true, minus_clear = true;
    int first_hit_level = 0; // 0 when clear
};

inline PlaneCheck fixed_plane_check(const QuadricSystem& sys, int max_ext = 4) {
    PlaneCheck pc;
    for (int t = 1; t <= max_ext; ++t) {
        if (pc.plus_clear && !plane_section(sys, true, t).empty()) {
            pc.plus_clear = false;
            if (!pc.first_hit_level) pc.first_hit_level = t;
        }
        if (pc.minus_clear && !plane_section(sys, false, t).empty()) {
            pc.minus_clear = false;
            if (!pc.first_hit_level) pc.first_hit_level = t;
        }
        if (!pc.plus_clear && !pc.minus_clear) break;
    }
    return pc;
}

// ---- quotient map ----------------------------------------------------------

using Pt12 = std::array<std::uint32_t, 12>;

// Evaluate the 12 invariant quadrics (documented order) and normalize: the
// image of the point under the quotient map to P^11.
inline Pt12 quotient_point(const TowerView& v, const Pt6& pt) {
    const FiniteField& F = *v.big;
    auto basis = invariant_basis_quads(F, v.a, v.b);
    Pt12 out{};
    for (int i = 0; i < 12; ++i) out[std::size_t(i)] = eval_quad(basis[std::size_t(i)], pt, F);
    for (int i = 0; i < 12; ++i) {
        std::uint32_t c = out[std::size_t(i)];
        if (c == 0) continue;
        if (c != 1) {
            std::uint32_t s = F.inv(c);
            for (int j = i; j < 12; ++j) out[std::size_t(j)] = F.mul(s, out[std::size_t(j)]);
        }
        return out;
    }
    throw std::domain_error("quotient map undefined: all 12 invariants vanish");
}

inline Pt12 quotient_point(const QuadricSystem& sys, int t, const Pt6& pt) {
    return quotient_point(tower_view(sys, t), pt);
}

// ---- quotient point counts -------------------------------------------------

// Solution table for the twisted equation y^(q') - u*y = rhs over the
// quadratic extension of F_{q'}: bucket all y by the left side's value.
inline std::vector<std::vector<std::uint32_t>> artin_schreier_table(const FiniteField& big,
                                                                    unsigned sub_log_p,
                                                                    std::uint32_t u) {
    std::vector<std::vector<std::uint32_t>> bucket(big.q());
    for (std::uint32_t y = 0; y < big.q(); ++y) {
        std::uint32_t lhs = big.add(big.frobenius(y, sub_log_p), big.neg(big.mul(u, y)));
        bucket[lhs].push_back(y);
    }
    return bucket;
}

// #Fix(sigma o Frobenius_{q'}) on the points of the cover over F_{q'^2},
// where q' = q^t.  Points split by the leading nonzero coordinate: with a
// leading x normalized to 1 the projective factor is trivial, the x-part is
// forced into F_{q'} and each y-coordinate solves a twisted equation; with
// x = 0 entirely, sigma acts by the scalar u, so the fixed points are just
// the F_{q'}-points of the plane section.
inline unsigned long long count_sigma_frobenius_fixed(const QuadricSystem& sys, int t) {
    const FiniteField& F = *sys.field;
    const unsigned sub_log = F.k() * unsigned(t); // q' = p^sub_log
    const FiniteField& sub = make_field(F.p(), sub_log);
    const FiniteField& big = make_field(F.p(), 2 * sub_log);
    auto emb_base = embed_field(F, big);     // base -> big
    auto emb_sub = embed_field(sub, big);    // F_{q'} -> big

    std::array<Quad21, 3> quads{};
    for (int r = 0; r < 3; ++r) quads[std::size_t(r)] = embed_quad(sys.quads[std::size_t(r)], emb_base);
    std::uint32_t a = emb_base[sys.a_code];
    std::uint32_t b = emb_base[sys.b_code];
    std::uint32_t u = big.add(1, big.neg(big.mul(b, a)));

    auto table = artin_schreier_table(big, sub_log, u);

    unsigned long long count = 0;

    // Patch family: leading coordinate x_lead = 1, earlier x's zero, later
    // x's ranging over F_{q'}; y's from the solution table.
    const std::uint32_t qprime = sub.q();
    for (int lead = 0; lead < 3; ++lead) {
        std::array<std::uint32_t, 3> px{}; // codes in the subfield
        int free_ct = 2 - lead;
        std::vector<std::uint32_t> idx(std::size_t(free_ct), 0);
        for (;;) {
            px = {0, 0, 0};
            px[std::size_t(lead)] = 1;
            for (int f = 0; f < free_ct; ++f) px[std::size_t(lead + 1 + f)] = idx[std::size_t(f)];
            // y_i solves lhs(y) = -u * a * px_i (all in the big field)
            Pt6 pt{};
            for (int i = 0; i < 3; ++i) pt[std::size_t(i)] = emb_sub[px[std::size_t(i)]];
            const std::vector<std::uint32_t>* sols[3] = {nullptr, nullptr, nullptr};
            bool feasible = true;
            for (int i = 0; i < 3 && feasible; ++i) {
                std::uint32_t rhs = big.neg(big.mul(big.mul(u, a), pt[std::size_t(i)]));
                sols[i] = &table[rhs];
                feasible = !sols[i]->empty();
            }
            if (feasible) {
                for (std::uint32_t y1 : *sols[0])
                    for (std::uint32_t y2 : *sols[1]) {
                        pt[3] = y1;
                        pt[4] = y2;
                        for (std::uint32_t y3 : *sols[2]) {
                            pt[5] = y3;
                            if (eval_quad(quads[0], pt, big) == 0 &&
                                eval_quad(quads[1], pt, big) == 0 &&
                                eval_quad(quads[2], pt, big) == 0)
                                ++count;
                        }
                    }
            }
            // odometer over the free x's
            int f = free_ct - 1;
            for (; f >= 0; --f) {
                if (++idx[std::size_t(f)] < qprime) break;
                idx[std::size_t(f)] = 0;
            }
            if (f < 0) break;
        }
    }

    // x = 0 patch: fixed points are the F_{q'}-points of the minus-plane
    // section.
    count += plane_section(sys, false, t).size();
    return count;
}

struct PointCounts {
    unsigned long long cover = 0;
    unsigned long long quotient = 0;
};

// cover = #X(F_{q^t}); quotient counts the Frobenius-stable orbits of the
// order-2 action for the etale/ordinary types ((#Fix(F) + #Fix(sF))/2), and
// equals the cover count for the purely inseparable types.
inline PointCounts count_quotient_points(const QuadricSystem& sys, int t, unsigned nthreads = 0,
                                         unsigned long long budget = DEFAULT_POINT_BUDGET) {
    PointCounts pc;
    pc.cover = rational_points(sys, t, nthreads, budget).size();
    GroupType gt = sys.type();
    if (gt == GroupType::Mu2 || gt == GroupType::Alpha2) {
        pc.quotient = pc.cover;
    } else {
        unsigned long long inert = count_sigma_frobenius_fixed(sys, t);
        if ((pc.cover + inert) % 2 != 0)
            throw std::logic_error("orbit parity violated in quotient count");
        pc.quotient = (pc.cover + inert) / 2;
    }
    return pc;
}

// Weil-type window |count - 1 - q^{2t}| <= 10 * q^t for the quotient counts.
inline bool weil_window_ok(unsigned long long quotient, unsigned long long q_t) {
    long long expect = 1 + (long long)(q_t * q_t);
    long long diff = (long long)quotient - expect;
    if (diff < 0) diff = -diff;
    return diff <= 10 * (long long)q_t;
}

} // namespace enq
