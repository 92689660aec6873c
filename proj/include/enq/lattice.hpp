#pragma once

// The rank-10 even unimodular hyperbolic lattice attached to the T_{2,3,7}
// diagram: Gram data, fundamental weights, reflections, chamber reduction,
// the phi function (minimum pairing against isotropic vectors found by exact
// bounded search), and the orbit-count arithmetic.
//
// Basis order everywhere: alpha_1 ... alpha_9 first (the chain), alpha_0
// last (the branch vertex attached to alpha_3).  Roots square to -2 and
// adjacent vertices pair to +1.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace enq {

using Vec10 = std::array<long long, 10>;
using Gram10 = std::array<std::array<long long, 10>, 10>;

inline const Gram10& gram_t237() {
    static const Gram10 G = [] {
        Gram10 g{};
        for (int i = 0; i < 10; ++i) g[std::size_t(i)][std::size_t(i)] = -2;
        auto link = [&g](int i, int j) {
            g[std::size_t(i)][std::size_t(j)] = 1;
            g[std::size_t(j)][std::size_t(i)] = 1;
        };
        for (int i = 0; i + 1 < 9; ++i) link(i, i + 1); // alpha_1 - ... - alpha_9
        link(9, 2);                                     // alpha_0 - alpha_3
        return g;
    }();
    return G;
}

inline long long pairing(const Vec10& x, const Vec10& y) {
    const Gram10& G = gram_t237();
    long long s = 0;
    for (int i = 0; i < 10; ++i) {
        long long row = 0;
        for (int j = 0; j < 10; ++j) row += G[std::size_t(i)][std::size_t(j)] * y[std::size_t(j)];
        s += x[std::size_t(i)] * row;
    }
    return s;
}

// The simple roots are the basis vectors themselves.
inline std::array<Vec10, 10> simple_roots() {
    std::array<Vec10, 10> out{};
    for (int i = 0; i < 10; ++i) out[std::size_t(i)][std::size_t(i)] = 1;
    return out;
}

// Vertex labels run alpha_0 .. alpha_9; coordinates store alpha_1..alpha_9
// then alpha_0.
inline std::size_t vertex_index(int label) {
    if (label < 0 || label > 9) throw std::invalid_argument("vertex label out of range");
    return label == 0 ? 9 : std::size_t(label - 1);
}

namespace detail {

// Minimal exact rational type; magnitudes here stay tiny (Dynkin minors).
struct Frac {
    long long n = 0, d = 1;
    Frac() = default;
    Frac(long long v) : n(v) {}
    Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.n * b.n, a.d * b.d); }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.n == 0) throw std::domain_error("division by zero fraction");
        return Frac(a.n * b.d, a.d * b.n);
    }
    bool is_zero() const { return n == 0; }
    bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
    double to_double() const { return double(n) / double(d); }
};

inline bool frac_le(const Frac& a, const Frac& b) { return a.n * b.d <= b.n * a.d; }
inline bool frac_lt(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }

} // namespace detail

// Exact determinant of the Gram matrix (fraction-free).
inline long long det_gram() {
    Gram10 m = gram_t237();
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < 10; ++k) {
        if (m[std::size_t(k)][std::size_t(k)] == 0) {
            int sw = -1;
            for (int i = k + 1; i < 10; ++i)
                if (m[std::size_t(i)][std::size_t(k)] != 0) { sw = i; break; }
            if (sw < 0) return 0;
            std::swap(m[std::size_t(k)], m[std::size_t(sw)]);
            sign = -sign;
        }
        for (int i = k + 1; i < 10; ++i)
            for (int j = k + 1; j < 10; ++j)
                m[std::size_t(i)][std::size_t(j)] =
                    (m[std::size_t(i)][std::size_t(j)] * m[std::size_t(k)][std::size_t(k)] -
                     m[std::size_t(i)][std::size_t(k)] * m[std::size_t(k)][std::size_t(j)]) /
                    prev;
        prev = m[std::size_t(k)][std::size_t(k)];
    }
    return sign * m[9][9];
}

// Signature by exact symmetric diagonalization (Sylvester).
inline std::pair<int, int> lattice_signature() {
    using detail::Frac;
    std::array<std::array<Frac, 10>, 10> m;
    const Gram10& G = gram_t237();
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) m[std::size_t(i)][std::size_t(j)] = Frac(G[std::size_t(i)][std::size_t(j)]);
    int pos = 0, neg = 0;
    for (int k = 0; k < 10; ++k) {
        if (m[std::size_t(k)][std::size_t(k)].is_zero()) {
            // Symmetric pivot fix: find l > k with m[l][k] != 0 and add row+col l.
            int l = -1;
            for (int i = k + 1; i < 10; ++i)
                if (!m[std::size_t(i)][std::size_t(k)].is_zero()) { l = i; break; }
            if (l < 0) continue; // zero row: contributes nothing (not expected here)
            for (int j = 0; j < 10; ++j)
                m[std::size_t(k)][std::size_t(j)] = m[std::size_t(k)][std::size_t(j)] + m[std::size_t(l)][std::size_t(j)];
            for (int i = 0; i < 10; ++i)
                m[std::size_t(i)][std::size_t(k)] = m[std::size_t(i)][std::size_t(k)] + m[std::size_t(i)][std::size_t(l)];
        }
        Frac piv = m[std::size_t(k)][std::size_t(k)];
        if (piv.is_zero()) continue;
        (piv.n > 0 ? pos : neg) += 1;
        for (int i = k + 1; i < 10; ++i) {
            Frac f = m[std::size_t(i)][std::size_t(k)] / piv;
            if (f.is_zero()) continue;
            for (int j = k; j < 10; ++j)
                m[std::size_t(i)][std::size_t(j)] = m[std::size_t(i)][std::size_t(j)] - f * m[std::size_t(k)][std::size_t(j)];
            for (int j = k; j < 10; ++j)
                m[std::size_t(j)][std::size_t(i)] = m[std::size_t(i)][std::size_t(j)];
        }
    }
    return {pos, neg};
}

// Unique vector with pairing(w, alpha_j) = delta_{label j}; exact rational
// solve, result verified integral.
inline Vec10 fundamental_weight(int label) {
    using detail::Frac;
    std::size_t target = vertex_index(label);
    const Gram10& G = gram_t237();
    std::array<std::array<Frac, 11>, 10> m; // augmented
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) m[std::size_t(i)][std::size_t(j)] = Frac(G[std::size_t(i)][std::size_t(j)]);
        m[std::size_t(i)][10] = Frac(std::size_t(i) == target ? 1 : 0);
    }
    for (int k = 0; k < 10; ++k) {
        int piv = -1;
        for (int i = k; i < 10; ++i)
            if (!m[std::size_t(i)][std::size_t(k)].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::logic_error("gram matrix singular");
        std::swap(m[std::size_t(k)], m[std::size_t(piv)]);
        Frac p = m[std::size_t(k)][std::size_t(k)];
        for (int j = k; j <= 10; ++j) m[std::size_t(k)][std::size_t(j)] = m[std::size_t(k)][std::size_t(j)] / p;
        for (int i = 0; i < 10; ++i) {
            if (i == k || m[std::size_t(i)][std::size_t(k)].is_zero()) continue;
            Frac f = m[std::size_t(i)][std::size_t(k)];
            for (int j = k; j <= 10; ++j)
                m[std::size_t(i)][std::size_t(j)] = m[std::size_t(i)][std::size_t(j)] - f * m[std::size_t(k)][std::size_t(j)];
        }
    }
    Vec10 w{};
    for (int i = 0; i < 10; ++i) {
        Frac v = m[std::size_t(i)][10];
        if (v.d != 1) throw std::logic_error("fundamental weight not integral");
        w[std::size_t(i)] = v.n;
    }
    return w;
}

inline Vec10 reflect(const Vec10& alpha, const Vec10& x) {
    if (pairing(alpha, alpha) != -2)
        throw std::invalid_argument("reflect: alpha must be a root (square -2)");
    long long c = pairing(x, alpha);
    Vec10 y = x;
    for (int i = 0; i < 10; ++i) y[std::size_t(i)] += c * alpha[std::size_t(i)];
    return y;
}

// ---- isotropic enumeration ------------------------------------------------
//
// Nonzero isotropic f must have nonzero alpha_1-coordinate c (the rank-9
// complement spanned by the other simple roots is negative definite), so we
// slice by c = 1..B and enumerate the remaining nine coordinates as lattice
// points of an exact ellipsoid: with Q = -(restricted gram), positive
// definite, the isotropy condition becomes Q(g - w_c) = Q(w_c) - 2c^2 for a
// rational center w_c.  A fraction-exact squared-completion of Q prunes the
// search; every emitted vector is re-verified in integers.  Only c >= 1
// representatives are returned; -f is isotropic with the same |x.f|.

namespace detail {

struct IsoEnum {
    // squared completion Q(v) = sum_i d[i] * (v_i + sum_{j>i} u[i][j] v_j)^2
    std::array<std::array<Frac, 9>, 9> u{};
    std::array<Frac, 9> d{};
    std::array<Frac, 9> center_unit{}; // Q^{-1} e_0 (alpha_2 direction)
    Frac qinv00;

    IsoEnum() {
        const Gram10& G = gram_t237();
        std::array<std::array<Frac, 9>, 9> q;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                q[std::size_t(i)][std::size_t(j)] = Frac(-G[std::size_t(i + 1)][std::size_t(j + 1)]);
        // solve Q w = e_0 exactly (Gauss-Jordan)
        std::array<std::array<Frac, 10>, 9> aug;
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) aug[std::size_t(i)][std::size_t(j)] = q[std::size_t(i)][std::size_t(j)];
            aug[std::size_t(i)][9] = Frac(i == 0 ? 1 : 0);
        }
        for (int k = 0; k < 9; ++k) {
            int piv = -1;
            for (int i = k; i < 9; ++i)
                if (!aug[std::size_t(i)][std::size_t(k)].is_zero()) { piv = i; break; }
            std::swap(aug[std::size_t(k)], aug[std::size_t(piv)]);
            Frac p = aug[std::size_t(k)][std::size_t(k)];
            for (int j = k; j <= 9; ++j) aug[std::size_t(k)][std::size_t(j)] = aug[std::size_t(k)][std::size_t(j)] / p;
            for (int i = 0; i < 9; ++i) {
                if (i == k || aug[std::size_t(i)][std::size_t(k)].is_zero()) continue;
                Frac f = aug[std::size_t(i)][std::size_t(k)];
                for (int j = k; j <= 9; ++j)
                    aug[std::size_t(i)][std::size_t(j)] = aug[std::size_t(i)][std::size_t(j)] - f * aug[std::size_t(k)][std::size_t(j)];
            }
        }
        for (int i = 0; i < 9; ++i) center_unit[std::size_t(i)] = aug[std::size_t(i)][9];
        qinv00 = center_unit[0];

        // squared completion by symmetric elimination
        auto work = q;
        for (int k = 0; k < 9; ++k) {
            d[std::size_t(k)] = work[std::size_t(k)][std::size_t(k)];
            if (d[std::size_t(k)].n <= 0) throw std::logic_error("restricted form not positive definite");
            for (int j = k + 1; j < 9; ++j)
                u[std::size_t(k)][std::size_t(j)] = work[std::size_t(k)][std::size_t(j)] / d[std::size_t(k)];
            for (int i = k + 1; i < 9; ++i)
                for (int j = k + 1; j < 9; ++j)
                    work[std::size_t(i)][std::size_t(j)] =
                        work[std::size_t(i)][std::size_t(j)] -
                        u[std::size_t(k)][std::size_t(i)] * work[std::size_t(k)][std::size_t(j)];
        }
    }

    // all isotropic vectors with alpha_1-coordinate c >= 1 and sup-norm <= B
    void enumerate(int B, std::vector<Vec10>& out) const {
        for (int c = 1; c <= B; ++c) {
            std::array<Frac, 9> w;
            for (int i = 0; i < 9; ++i) w[std::size_t(i)] = Frac(c) * center_unit[std::size_t(i)];
            Frac T = Frac(c) * Frac(c) * (qinv00 - Frac(2));
            if (T.n < 0) continue;
            std::array<long long, 9> g{};
            dfs(8, T, w, g, c, B, out);
        }
    }

private:
    void dfs(int level, Frac budget, const std::array<Frac, 9>& w, std::array<long long, 9>& g,
             int c, int B, std::vector<Vec10>& out) const {
        // offset_i = g_i - w_i + sum_{j>i} u[i][j] (g_j - w_j); need
        // d_i * offset_i^2 <= budget.
        Frac shift{};
        for (int j = level + 1; j < 9; ++j)
            shift = shift + u[std::size_t(level)][std::size_t(j)] * (Frac(g[std::size_t(j)]) - w[std::size_t(j)]);
        // center for g_level: w_level - shift
        Frac ctr = w[std::size_t(level)] - shift;
        double r = std::sqrt(std::max(0.0, budget.to_double() / d[std::size_t(level)].to_double()));
        long long lo = llround(std::floor(ctr.to_double() - r)) - 1;
        long long hi = llround(std::ceil(ctr.to_double() + r)) + 1;
        if (lo < -B) lo = -B;
        if (hi > B) hi = B;
        for (long long v = lo; v <= hi; ++v) {
            Frac off = Frac(v) - ctr;
            Frac cost = d[std::size_t(level)] * off * off;
            if (!frac_le(cost, budget)) continue;
            g[std::size_t(level)] = v;
            if (level == 0) {
                Vec10 f{};
                f[0] = c;
                for (int i = 0; i < 9; ++i) f[std::size_t(i + 1)] = g[std::size_t(i)];
                if (pairing(f, f) == 0) out.push_back(f);
            } else {
                dfs(level - 1, budget - cost, w, g, c, B, out);
            }
        }
    }
};

inline const IsoEnum& iso_enum() {
    static const IsoEnum e;
    return e;
}

} // namespace detail

// Nonzero isotropic vectors with all alpha-coordinates in [-B, B]; one
// representative per +/- pair (alpha_1-coordinate >= 1).
inline std::vector<Vec10> isotropic_in_box(int B) {
    if (B < 1) throw std::invalid_argument("isotropic_in_box: box must be >= 1");
    std::vector<Vec10> out;
    detail::iso_enum().enumerate(B, out);
    return out;
}

inline long long min_abs_pairing(const Vec10& x, const std::vector<Vec10>& fs) {
    long long best = -1;
    for (auto& f : fs) {
        long long v = pairing(x, f);
        if (v < 0) v = -v;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

struct PhiResult {
    bool resolved = false;
    long long value = -1; // min |x.f| over the search set when resolved
    int box_used = 0;     // radius at which isotropic vectors were found
    std::size_t witnesses = 0;
};

// phi(x, B): minimum |x.f| over nonzero isotropic f with coordinates in the
// +/-B box.  The +/-5 box provably contains no isotropic vector (the first
// nonempty radius is 6), so a literal single-radius search with small B has
// nothing to minimize over; by default the search widens one radius at a
// time until it sees isotropic vectors (radius 6 is always enough), and the
// result records which radius resolved it.  strict = true keeps the literal
// single-box semantics and reports unresolved instead of widening.
inline PhiResult phi(const Vec10& x, int box = 3, bool strict = false) {
    long long xx = pairing(x, x);
    if (xx < 0) throw std::invalid_argument("phi: class must have nonnegative square");
    if (xx == 0) {
        bool zero = true;
        for (auto v : x) zero = zero && v == 0;
        if (!zero) return {true, 0, 0, 1}; // x itself is an isotropic witness
    }
    const int hard_cap = 16; // enumeration stays exact but gets pointless past this
    int limit = strict ? box : std::max(box, 6);
    if (limit > hard_cap) limit = hard_cap;
    for (int B = box; B <= limit; ++B) {
        auto fs = isotropic_in_box(B);
        if (!fs.empty())
            return {true, min_abs_pairing(x, fs), B, fs.size()};
        if (strict) break;
    }
    return {};
}

struct ReduceResult {
    Vec10 vec{};
    std::vector<std::size_t> word; // indices into the root list, in application order
};

// Greedy chamber reduction: while some listed root pairs negatively, reflect.
// The walk terminates on the positive cone; elsewhere coordinates can grow
// without bound, so both a step guard and a coordinate bound turn divergence
// into an error instead of overflow.
inline ReduceResult chamber_reduce(const Vec10& x, const std::vector<Vec10>& roots,
                                   std::size_t guard = 1000000) {
    // |coord| <= 2^28 and |root coord| <= 2^14 guarantee one reflection step
    // stays inside int64, so the bound check below runs on exact values.
    constexpr long long COORD_BOUND = 1ll << 28;
    constexpr long long ROOT_BOUND = 1ll << 14;
    auto bounded = [](const Vec10& v, long long bound) {
        for (auto c : v)
            if (c > bound || c < -bound) return false;
        return true;
    };
    for (auto& r : roots) {
        if (pairing(r, r) != -2)
            throw std::invalid_argument("chamber_reduce: non-root in root set");
        if (!bounded(r, ROOT_BOUND))
            throw std::invalid_argument("chamber_reduce: root coordinate out of range");
    }
    if (!bounded(x, COORD_BOUND))
        throw std::invalid_argument("chamber_reduce: coordinate out of range");
    ReduceResult res;
    res.vec = x;
    std::size_t steps = 0;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (pairing(res.vec, roots[i]) < 0) {
                res.vec = reflect(roots[i], res.vec);
                res.word.push_back(i);
                moved = true;
                if (!bounded(res.vec, COORD_BOUND))
                    throw std::runtime_error(
                        "chamber_reduce: diverging reflection walk (vector outside the "
                        "positive cone)");
                if (++steps > guard)
                    throw std::runtime_error("chamber_reduce: reflection guard exceeded");
            }
        }
        if (!moved) return res;
    }
}

inline bool is_ample_class(const Vec10& x, const std::vector<Vec10>& roots) {
    for (auto& r : roots)
        if (pairing(x, r) <= 0) return false;
    return true;
}

// ---- orbit-count arithmetic ----------------------------------------------

struct OrbitCount {
    unsigned long long weyl_d9 = 0;   // |W(D_9)| = 2^8 * 9!
    unsigned long long numerator = 0; // 2^20 * 3^5 * 5^2 * 7 * 17 * 31
    unsigned long long quotient = 0;  // numerator / weyl_d9
};

inline std::vector<std::pair<unsigned long long, int>> factorize(unsigned long long n) {
    std::vector<std::pair<unsigned long long, int>> out;
    for (unsigned long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline OrbitCount orbit_count_check() {
    OrbitCount r;
    unsigned long long fact9 = 1;
    for (unsigned long long i = 2; i <= 9; ++i) fact9 *= i;
    r.weyl_d9 = (1ull << 8) * fact9;
    auto expect_d9 = std::vector<std::pair<unsigned long long, int>>{{2, 15}, {3, 4}, {5, 1}, {7, 1}};
    if (factorize(r.weyl_d9) != expect_d9)
        throw std::logic_error("orbit count: |W(D9)| factorization mismatch");
    r.numerator = (1ull << 20);
    for (int i = 0; i < 5; ++i) r.numerator *= 3;
    r.numerator *= 5ull * 5ull * 7ull * 17ull * 31ull;
    if (r.numerator % r.weyl_d9 != 0)
        throw std::logic_error("orbit count: quotient not integral");
    r.quotient = r.numerator / r.weyl_d9;
    if (r.quotient != 252960)
        throw std::logic_error("orbit count: quotient != 252960");
    auto expect_q = std::vector<std::pair<unsigned long long, int>>{{2, 5}, {3, 1}, {5, 1}, {17, 1}, {31, 1}};
    if (factorize(r.quotient) != expect_q)
        throw std::logic_error("orbit count: quotient factorization mismatch");
    return r;
}

} // namespace enq
