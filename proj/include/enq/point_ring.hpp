#pragma once

// Rank-2 extension R[s]/(s^2 - a*s) of a coefficient ring R.
//
// Elements are pairs (c0, c1) = c0 + c1*s together with the parameter a that
// pins down the relation.  The parameter rides along on the elements so the
// type composes with itself: taking R itself to be a PointRingElt ring gives
// R[s,t]/(s^2-as, t^2-at), which is where the two-generator group-law
// identities live.
//
// Mixing elements built over different nonzero parameters throws; the
// parameter of a constant is zero and defers to the other operand.

#include <stdexcept>
#include <string>

namespace enq {

template <class R>
class PointRingElt {
public:
    PointRingElt() = default;
    explicit PointRingElt(R c0) : c0_(std::move(c0)) {}
    PointRingElt(R c0, R c1, R a) : c0_(std::move(c0)), c1_(std::move(c1)), a_(std::move(a)) {}

    // The generator s of R[s]/(s^2 - a*s); `one` is the unit of R (the
    // caller knows how to make one, e.g. FieldElement(F, 1) or Sym(1)).
    static PointRingElt gen(R a, R one) { return PointRingElt(R{}, std::move(one), std::move(a)); }

    const R& c0() const { return c0_; }
    const R& c1() const { return c1_; }
    const R& param() const { return a_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

    PointRingElt operator-() const { return PointRingElt(-c0_, -c1_, a_); }

    friend PointRingElt operator+(const PointRingElt& l, const PointRingElt& r) {
        return PointRingElt(l.c0_ + r.c0_, l.c1_ + r.c1_, merge(l.a_, r.a_));
    }
    friend PointRingElt operator-(const PointRingElt& l, const PointRingElt& r) {
        return l + (-r);
    }
    friend PointRingElt operator*(const PointRingElt& l, const PointRingElt& r) {
        R a = merge(l.a_, r.a_);
        // (c0 + c1 s)(d0 + d1 s) = c0 d0 + (c0 d1 + c1 d0 + a c1 d1) s
        return PointRingElt(l.c0_ * r.c0_,
                            l.c0_ * r.c1_ + l.c1_ * r.c0_ + a * l.c1_ * r.c1_, a);
    }

    bool operator==(const PointRingElt& o) const { return c0_ == o.c0_ && c1_ == o.c1_; }
    bool operator!=(const PointRingElt& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + c0_.to_string() + ")+(" + c1_.to_string() + ")s";
    }

private:
    static R merge(const R& x, const R& y) {
        if (x.is_zero()) return y;
        if (y.is_zero() || x == y) return x;
        throw std::invalid_argument("point ring: parameter mismatch");
    }
    R c0_{};
    R c1_{};
    R a_{};
};

} // namespace enq
