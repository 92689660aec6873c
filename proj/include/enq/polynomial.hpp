#pragma once

// Sparse polynomials in the six projective coordinates x1,x2,x3,y1,y2,y3,
// over an arbitrary coefficient ring (finite field elements, the symbolic
// ring, or a point ring over either).
//
// Terms live in a map keyed by exponent vectors in graded-lex order with
// x1 > x2 > x3 > y1 > y2 > y3: lower total degree first, and within a degree
// the lexicographically larger exponent vector first (so x1^2 precedes
// x1*x2 precedes x2^2).  That order is also the documented serialization
// order of every quadric this library emits.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace enq {

inline constexpr int NVARS = 6;
using Exp6 = std::array<std::uint8_t, NVARS>;

inline constexpr std::array<const char*, NVARS> VAR_NAMES = {"x1", "x2", "x3",
                                                             "y1", "y2", "y3"};

inline int total_degree(const Exp6& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

struct GradedLexLess {
    bool operator()(const Exp6& l, const Exp6& r) const {
        int dl = total_degree(l), dr = total_degree(r);
        if (dl != dr) return dl < dr;
        return l > r; // larger exponent vector = earlier term
    }
};

template <class R>
class Polynomial {
public:
    using TermMap = std::map<Exp6, R, GradedLexLess>;

    Polynomial() = default;

    static Polynomial term(const Exp6& e, R c) {
        Polynomial f;
        f.add_term(e, std::move(c));
        return f;
    }
    static Polynomial constant(R c) { return term(Exp6{}, std::move(c)); }
    static Polynomial var(int i, R one) {
        Exp6 e{};
        e.at(static_cast<std::size_t>(i)) = 1;
        return term(e, std::move(one));
    }

    void add_term(const Exp6& e, const R& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
    bool is_homogeneous(int d) const {
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const {
        Polynomial f;
        for (auto& [e, c] : terms_) f.terms_.emplace(e, -c);
        return f;
    }
    friend Polynomial operator+(const Polynomial& l, const Polynomial& r) {
        Polynomial f = l;
        for (auto& [e, c] : r.terms_) f.add_term(e, c);
        return f;
    }
    friend Polynomial operator-(const Polynomial& l, const Polynomial& r) { return l + (-r); }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        Polynomial f;
        for (auto& [el, cl] : l.terms_)
            for (auto& [er, cr] : r.terms_) {
                Exp6 e;
                for (int i = 0; i < NVARS; ++i) {
                    unsigned s = unsigned(el[std::size_t(i)]) + unsigned(er[std::size_t(i)]);
                    if (s > 255) throw std::overflow_error("polynomial exponent overflow");
                    e[std::size_t(i)] = static_cast<std::uint8_t>(s);
                }
                f.add_term(e, cl * cr);
            }
        return f;
    }
    Polynomial scaled(const R& c) const {
        Polynomial f;
        for (auto& [e, t] : terms_) f.add_term(e, t * c);
        return f;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact evaluation; `point` supplies one ring element per variable.
    R evaluate(const std::vector<R>& point) const {
        if (point.size() != NVARS) throw std::invalid_argument("evaluate: need 6 coordinates");
        R acc{};
        for (auto& [e, c] : terms_) {
            R v = c;
            for (int i = 0; i < NVARS; ++i)
                for (int j = 0; j < e[std::size_t(i)]; ++j) v = v * point[std::size_t(i)];
            acc = acc + v;
        }
        return acc;
    }

    template <class S, class Fn>
    Polynomial<S> map_coeffs(Fn fn) const {
        Polynomial<S> f;
        for (auto& [e, c] : terms_) f.add_term(e, fn(c));
        return f;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            for (int i = 0; i < NVARS; ++i) {
                int ei = e[std::size_t(i)];
                if (ei == 0) continue;
                s += std::string("*") + VAR_NAMES[std::size_t(i)];
                if (ei > 1) s += "^" + std::to_string(ei);
            }
        }
        return s;
    }

private:
    TermMap terms_;
};

template <class R>
using Mat6 = std::array<std::array<R, 6>, 6>;

// Determinant by expansion along the first remaining row; exact over any
// commutative ring.  Used only as a singularity guard, so no attempt to be
// clever about sparsity.
template <class R>
R mat6_det(const Mat6<R>& M) {
    std::array<int, 6> cols = {0, 1, 2, 3, 4, 5};
    struct Rec {
        const Mat6<R>& m;
        R run(int row, std::array<int, 6>& cs, int n) {
            if (n == 1) return m[std::size_t(row)][std::size_t(cs[0])];
            R acc{};
            for (int j = 0; j < n; ++j) {
                int col = cs[std::size_t(j)];
                for (int t = j; t + 1 < n; ++t) cs[std::size_t(t)] = cs[std::size_t(t + 1)];
                R sub = m[std::size_t(row)][std::size_t(col)] * run(row + 1, cs, n - 1);
                for (int t = n - 1; t > j; --t) cs[std::size_t(t)] = cs[std::size_t(t - 1)];
                cs[std::size_t(j)] = col;
                acc = (j % 2 == 0) ? acc + sub : acc - sub;
            }
            return acc;
        }
    } rec{M};
    return rec.run(0, cols, 6);
}

// Replace variable i by the linear form sum_j M[i][j] * var_j (rows are
// variable images).  `embed` lifts f's coefficients into the matrix ring.
// Throws if M has zero determinant.
template <class S, class R, class Embed>
Polynomial<S> substitute_linear(const Polynomial<R>& f, const Mat6<S>& M, Embed embed) {
    if (mat6_det(M).is_zero()) throw std::invalid_argument("substitute_linear: singular matrix");
    std::array<Polynomial<S>, 6> image;
    for (int i = 0; i < NVARS; ++i) {
        Exp6 e{};
        for (int j = 0; j < NVARS; ++j) {
            e = Exp6{};
            e[std::size_t(j)] = 1;
            image[std::size_t(i)].add_term(e, M[std::size_t(i)][std::size_t(j)]);
        }
    }
    Polynomial<S> out;
    for (auto& [e, c] : f.terms()) {
        Polynomial<S> term = Polynomial<S>::constant(embed(c));
        for (int i = 0; i < NVARS; ++i)
            for (int j = 0; j < e[std::size_t(i)]; ++j) term = term * image[std::size_t(i)];
        out = out + term;
    }
    return out;
}

template <class R>
Polynomial<R> substitute_linear(const Polynomial<R>& f, const Mat6<R>& M) {
    return substitute_linear<R, R>(f, M, [](const R& c) { return c; });
}

} // namespace enq
