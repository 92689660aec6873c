#pragma once

// The coefficient ring Z[a,b]/(ab - 2).
//
// Because every mixed monomial a^i b^j collapses to 2^min(i,j) times a pure
// power, elements have a unique normal form as a Z-linear combination of
// { ..., b^2, b, 1, a, a^2, ... }.  We keep that normal form eagerly: the
// representation maps an integer key to the coefficient of a^key (key > 0),
// b^(-key) (key < 0) or 1 (key == 0).  All arithmetic lands back in normal
// form, so equality is plain map comparison.

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace enq {

class Sym {
public:
    Sym() = default;
    Sym(long long n) {
        if (n != 0) c_[0] = n;
    }

    static Sym gen_a() { return monomial(1, 1); }
    static Sym gen_b() { return monomial(-1, 1); }
    static Sym monomial(int key, long long coeff) {
        Sym e;
        if (coeff != 0) e.c_[key] = coeff;
        return e;
    }

    bool is_zero() const { return c_.empty(); }

    Sym operator-() const {
        Sym r;
        for (auto& [k, v] : c_) r.c_[k] = -v;
        return r;
    }

    Sym& operator+=(const Sym& o) {
        for (auto& [k, v] : o.c_) add_term(k, v);
        return *this;
    }
    Sym& operator-=(const Sym& o) {
        for (auto& [k, v] : o.c_) add_term(k, -v);
        return *this;
    }

    friend Sym operator+(Sym l, const Sym& r) { return l += r; }
    friend Sym operator-(Sym l, const Sym& r) { return l -= r; }

    friend Sym operator*(const Sym& l, const Sym& r) {
        Sym out;
        for (auto& [ka, va] : l.c_)
            for (auto& [kb, vb] : r.c_) {
                // a^i * b^j -> 2^min(i,j) * leftover pure power.
                long long c = va * vb;
                int key;
                if (ka == 0 || kb == 0 || (ka > 0) == (kb > 0)) {
                    key = ka + kb;
                } else {
                    int i = ka > 0 ? ka : kb;   // a-exponent
                    int j = ka < 0 ? -ka : -kb; // b-exponent
                    int m = i < j ? i : j;
                    c <<= m;
                    key = (i - m) - (j - m);
                }
                out.add_term(key, c);
            }
        return out;
    }
    Sym& operator*=(const Sym& o) { return *this = *this * o; }

    bool operator==(const Sym& o) const { return c_ == o.c_; }
    bool operator!=(const Sym& o) const { return !(*this == o); }

    // Substitute concrete values for a and b.  T needs ring ops and a
    // T(long long)-style scalar action through repeated addition is avoided:
    // we require T constructible from long long via the caller-provided maps.
    template <class T, class FromInt>
    T substitute(const T& va, const T& vb, FromInt from_int) const {
        T acc{};
        for (auto& [k, v] : c_) {
            T term = from_int(v);
            for (int i = 0; i < (k > 0 ? k : -k); ++i) term = term * (k > 0 ? va : vb);
            acc = acc + term;
        }
        return acc;
    }

    // Canonical print: descending b-powers, constant, ascending a-powers
    // would be unusual; we print in key order (b-powers first) which is the
    // map's natural order, e.g. "-b^2+3+2a".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [k, v] : c_) {
            long long av = v < 0 ? -v : v;
            if (!s.empty() && v > 0) s += '+';
            if (v < 0) s += '-';
            if (av != 1 || k == 0) s += std::to_string(av);
            if (k != 0) {
                if (av != 1) s += '*';
                s += k > 0 ? 'a' : 'b';
                int e = k > 0 ? k : -k;
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    // Inverse of to_string; also accepts redundant '+' and whitespace.
    static Sym parse(const std::string& text) {
        Sym out;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
        skip_ws();
        if (i == text.size()) throw std::invalid_argument("empty ring element");
        while (i < text.size()) {
            long long sign = 1;
            while (i < text.size() && (text[i] == '+' || text[i] == '-' || text[i] == ' ')) {
                if (text[i] == '-') sign = -sign;
                ++i;
            }
            if (i == text.size()) throw std::invalid_argument("dangling sign in ring element");
            long long coeff = 1;
            bool saw_digit = false;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    coeff = coeff * 10 + (text[i++] - '0');
                saw_digit = true;
            }
            if (i < text.size() && text[i] == '*') ++i;
            int key = 0;
            if (i < text.size() && (text[i] == 'a' || text[i] == 'b')) {
                int dir = text[i] == 'a' ? 1 : -1;
                ++i;
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw std::invalid_argument("bad exponent in ring element");
                    e = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        e = e * 10 + (text[i++] - '0');
                }
                key = dir * e;
            } else if (!saw_digit) {
                throw std::invalid_argument("bad ring element: " + text);
            }
            out.add_term(key, sign * coeff);
            skip_ws();
        }
        return out;
    }

    const std::map<int, long long>& terms() const { return c_; }

private:
    void add_term(int key, long long v) {
        if (v == 0) return;
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_[key] = v;
        } else if ((it->second += v) == 0) {
            c_.erase(it);
        }
    }

    std::map<int, long long> c_;
};

inline Sym symbolic_reduce(const Sym& e) { return e; } // always in normal form

} // namespace enq
