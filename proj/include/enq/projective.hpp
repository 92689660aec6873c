#pragma once

// Exact enumeration of P^5(F_q) and batched evaluation of quadric systems.
//
// Points are stored as 6 field-element codes normalized so the first
// nonzero coordinate is 1.  The canonical order lists patches by the index
// of that leading coordinate (patch 0 first), and within a patch runs an
// odometer over the free coordinates with the last coordinate fastest.
// Every point has a linear index in this order, which is what makes slab
// parallelism deterministic: slabs are index ranges, outputs are
// concatenated in slab order, and the merged list is independent of the
// thread count.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "enq/fields.hpp"
#include "enq/polynomial.hpp"

namespace enq {

using Pt6 = std::array<std::uint32_t, 6>;

inline constexpr unsigned long long DEFAULT_POINT_BUDGET = 100000000ull; // 1e8 projective points

inline unsigned long long p5_size(unsigned long long q) {
    // (q^6 - 1) / (q - 1); q^5 must fit in 64 bits
    if (q > 4096) throw std::invalid_argument("p5_size: field too large to enumerate");
    unsigned long long n = 1, pw = 1;
    for (int i = 1; i <= 5; ++i) { pw *= q; n += pw; }
    return n;
}

// The 21 quadratic monomials c_i c_j, i <= j, ordered lexicographically by
// (i, j).  This indexing is shared with the expanded-quadric code vectors.
inline const std::array<std::pair<int, int>, 21>& mon2_pairs() {
    static const auto pairs = [] {
        std::array<std::pair<int, int>, 21> out{};
        int n = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) out[std::size_t(n++)] = {i, j};
        return out;
    }();
    return pairs;
}

inline int mon2_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * 6 - i * (i + 1) / 2 + j; // row offsets 0,6,11,15,18,20
}

// 21 coefficient codes over a field = one quadric, ready for fast evaluation.
using Quad21 = std::array<std::uint32_t, 21>;

inline std::uint32_t eval_quad(const Quad21& q, const Pt6& pt, const FiniteField& F) {
    std::uint32_t acc = 0;
    const auto& pairs = mon2_pairs();
    for (int t = 0; t < 21; ++t) {
        std::uint32_t c = q[std::size_t(t)];
        if (c == 0) continue;
        auto [i, j] = pairs[std::size_t(t)];
        std::uint32_t m = F.mul(pt[std::size_t(i)], pt[std::size_t(j)]);
        if (m == 0) continue;
        acc = F.add(acc, F.mul(c, m));
    }
    return acc;
}

// Quadric as a Polynomial over the same field (for the naive-evaluation
// oracle and serialization).
inline Polynomial<FieldElement> quad_to_poly(const Quad21& q, const FiniteField& F) {
    Polynomial<FieldElement> f;
    const auto& pairs = mon2_pairs();
    for (int t = 0; t < 21; ++t) {
        if (q[std::size_t(t)] == 0) continue;
        auto [i, j] = pairs[std::size_t(t)];
        Exp6 e{};
        e[std::size_t(i)] = static_cast<std::uint8_t>(e[std::size_t(i)] + 1);
        e[std::size_t(j)] = static_cast<std::uint8_t>(e[std::size_t(j)] + 1);
        f.add_term(e, FieldElement(F, q[std::size_t(t)]));
    }
    return f;
}

inline Quad21 poly_to_quad(const Polynomial<FieldElement>& f) {
    Quad21 q{};
    for (auto& [e, c] : f.terms()) {
        int vars[2], n = 0;
        for (int i = 0; i < 6; ++i)
            for (int r = 0; r < e[std::size_t(i)]; ++r) {
                if (n == 2) throw std::invalid_argument("poly_to_quad: degree > 2");
                vars[n++] = i;
            }
        if (n != 2) throw std::invalid_argument("poly_to_quad: non-quadratic term");
        q[std::size_t(mon2_index(vars[0], vars[1]))] = c.code();
    }
    return q;
}

// Canonical enumeration of P^5(F_q).
class PointEnum {
public:
    explicit PointEnum(const FiniteField& F,
                       unsigned long long budget = DEFAULT_POINT_BUDGET)
        : F_(&F) {
        total_ = p5_size(F.q());
        if (total_ > budget)
            throw std::invalid_argument("point enumeration exceeds the configured budget");
    }

    const FiniteField& field() const { return *F_; }
    unsigned long long size() const { return total_; }

    // Decode the point at a linear index (patch-major canonical order).
    Pt6 point_at(unsigned long long idx) const {
        const unsigned long long q = F_->q();
        unsigned long long patch_size = 1;
        for (int i = 0; i < 5; ++i) patch_size *= q; // q^5 for patch 0
        int patch = 0;
        while (idx >= patch_size) {
            idx -= patch_size;
            patch_size /= q;
            ++patch;
            if (patch > 5) throw std::out_of_range("point index out of range");
        }
        Pt6 pt{};
        pt[std::size_t(patch)] = 1;
        for (int c = 5; c > patch; --c) {
            pt[std::size_t(c)] = static_cast<std::uint32_t>(idx % q);
            idx /= q;
        }
        return pt;
    }

    // Visit points with indices in [lo, hi) in canonical order.
    template <class Fn>
    void for_each(unsigned long long lo, unsigned long long hi, Fn fn) const {
        if (lo >= hi) return;
        const std::uint32_t q = F_->q();
        Pt6 pt = point_at(lo);
        int patch = 0;
        while (pt[std::size_t(patch)] == 0) ++patch;
        for (unsigned long long i = lo; i < hi; ++i) {
            fn(pt, i);
            // odometer: bump the tail, carrying; on patch overflow move on
            int c = 5;
            for (; c > patch; --c) {
                if (++pt[std::size_t(c)] < q) break;
                pt[std::size_t(c)] = 0;
            }
            if (c == patch) { // patch exhausted; next patch leader
                if (patch == 5) return;
                pt = Pt6{};
                pt[std::size_t(++patch)] = 1;
            }
        }
    }

private:
    const FiniteField* F_;
    unsigned long long total_;
};

// All points where the three quadrics vanish, in canonical order; the same
// list for any worker count.
inline std::vector<Pt6> zero_locus(const std::array<Quad21, 3>& sys, const FiniteField& F,
                                   unsigned nthreads = 0,
                                   unsigned long long budget = DEFAULT_POINT_BUDGET) {
    PointEnum en(F, budget);
    if (nthreads == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        nthreads = hw ? hw : 1;
        if (en.size() < 65536) nthreads = 1; // not worth spawning
    }
    if (nthreads > 64) nthreads = 64;
    std::vector<std::vector<Pt6>> found(nthreads);
    auto work = [&](unsigned t) {
        unsigned long long lo = en.size() * t / nthreads;
        unsigned long long hi = en.size() * (t + 1) / nthreads;
        auto& out = found[t];
        en.for_each(lo, hi, [&](const Pt6& pt, unsigned long long) {
            if (eval_quad(sys[0], pt, F) == 0 && eval_quad(sys[1], pt, F) == 0 &&
                eval_quad(sys[2], pt, F) == 0)
                out.push_back(pt);
        });
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::vector<Pt6> out;
    for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
    return out;
}

// Naive per-point oracle used by the equivalence tests.
inline std::vector<Pt6> zero_locus_naive(const std::array<Quad21, 3>& sys,
                                         const FiniteField& F,
                                         unsigned long long budget = DEFAULT_POINT_BUDGET) {
    std::array<Polynomial<FieldElement>, 3> polys = {
        quad_to_poly(sys[0], F), quad_to_poly(sys[1], F), quad_to_poly(sys[2], F)};
    PointEnum en(F, budget);
    std::vector<Pt6> out;
    en.for_each(0, en.size(), [&](const Pt6& pt, unsigned long long) {
        std::vector<FieldElement> v;
        v.reserve(6);
        for (auto c : pt) v.emplace_back(F, c);
        for (auto& f : polys)
            if (!f.evaluate(v).is_zero()) return;
        out.push_back(pt);
    });
    return out;
}

inline Pt6 normalize_point(Pt6 pt, const FiniteField& F) {
    for (int i = 0; i < 6; ++i) {
        std::uint32_t c = pt[std::size_t(i)];
        if (c == 0) continue;
        if (c != 1) {
            std::uint32_t s = F.inv(c);
            for (int j = i; j < 6; ++j) pt[std::size_t(j)] = F.mul(s, pt[std::size_t(j)]);
        }
        return pt;
    }
    throw std::invalid_argument("normalize_point: zero vector");
}

// Coordinate-wise p^e-th power, renormalized.  Callers pass e = k * power to
// realize the q^power Frobenius relative to a base field F_{p^k}.
inline Pt6 frobenius_point(const Pt6& pt, const FiniteField& F, unsigned e) {
    Pt6 out{};
    for (int i = 0; i < 6; ++i) out[std::size_t(i)] = F.frobenius(pt[std::size_t(i)], e);
    return normalize_point(out, F);
}

// ---- plane restrictions ---------------------------------------------------
//
// P_plus = {y1=y2=y3=0} and P_minus = {x1=x2=x3=0} are the two distinguished
// planes.  Restricting a quadric to either keeps the 6 monomials in the
// surviving three coordinates.

using Tri6 = std::array<std::uint32_t, 6>; // coefficients of u_i u_j, i<=j, lex

inline Tri6 restrict_quad(const Quad21& q, bool plus_plane) {
    Tri6 out{};
    int base = plus_plane ? 0 : 3; // surviving variables
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            out[std::size_t(n++)] =
                q[std::size_t(mon2_index(base + i, base + j))];
    return out;
}

using Pt3 = std::array<std::uint32_t, 3>;

inline std::uint32_t eval_tri(const Tri6& q, const Pt3& pt, const FiniteField& F) {
    std::uint32_t acc = 0;
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            std::uint32_t c = q[std::size_t(n++)];
            if (c == 0) continue;
            std::uint32_t m = F.mul(pt[std::size_t(i)], pt[std::size_t(j)]);
            if (m != 0) acc = F.add(acc, F.mul(c, m));
        }
    return acc;
}

// Common zeros in P^2(F) of three ternary quadrics.
inline std::vector<Pt3> plane_zero_locus(const std::array<Tri6, 3>& sys, const FiniteField& F) {
    std::vector<Pt3> out;
    const std::uint32_t q = F.q();
    auto test = [&](const Pt3& pt) {
        if (eval_tri(sys[0], pt, F) == 0 && eval_tri(sys[1], pt, F) == 0 &&
            eval_tri(sys[2], pt, F) == 0)
            out.push_back(pt);
    };
    for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) test(Pt3{1, b, c});
    for (std::uint32_t c = 0; c < q; ++c) test(Pt3{0, 1, c});
    test(Pt3{0, 0, 1});
    return out;
}

} // namespace enq
