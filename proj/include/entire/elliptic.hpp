#ifndef ENTIRE_ELLIPTIC_HPP
#define ENTIRE_ELLIPTIC_HPP

// Chord-tangent arithmetic on a Weierstrass level x^2 = t^3 + a2 t^2 + a1 t
// + a0 (the curve coordinate t is the abscissa, x the ordinate). The point
// at infinity is the group identity and is represented explicitly.

#include <optional>

#include "entire/curve.hpp"

namespace entire {

struct ECPoint {
    bool infinity = true;
    AlgebraicNumber t, x;

    static ECPoint at_infinity() { return ECPoint{}; }
    static ECPoint affine(AlgebraicNumber tv, AlgebraicNumber xv) { return ECPoint{false, std::move(tv), std::move(xv)}; }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.t == b.t && a.x == b.x;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }

    std::string str() const { return infinity ? "inf" : "(" + t.str() + ", " + x.str() + ")"; }
};

class EllipticLevel {
  public:
    EllipticLevel(const Tower& tw, std::string level_id) : tower_(&tw), level_(std::move(level_id)) {
        const CurveLevel& lvl = tw.level(level_);
        if (lvl.genus != 1) throw std::invalid_argument("level '" + level_ + "' does not have genus 1");
        a0_ = embed(tw.field, lvl.cubic.coeff(0));
        a1_ = embed(tw.field, lvl.cubic.coeff(1));
        a2_ = embed(tw.field, lvl.cubic.coeff(2));
    }

    const std::string& level_id() const { return level_; }
    const AlgebraicNumber& a0() const { return a0_; }
    const AlgebraicNumber& a1() const { return a1_; }
    const AlgebraicNumber& a2() const { return a2_; }

    bool on_curve(const ECPoint& p) const {
        if (p.infinity) return true;
        return (p.x * p.x - rhs(p.t)).is_zero();
    }

    AlgebraicNumber rhs(const AlgebraicNumber& t) const { return ((t + a2_) * t + a1_) * t + a0_; }

    ECPoint from_point(const Point& p) const { return ECPoint::affine(p.t(), p.x()); }

    // Converts back to a model point; the group law can pass through chart
    // points excluded from the affine model, in which case this throws.
    Point to_point(const ECPoint& p) const {
        if (p.infinity) throw std::domain_error("to_point: point at infinity is not affine");
        return tower_->make_point(level_, {p.t, p.x});
    }

    ECPoint neg(const ECPoint& p) const {
        if (p.infinity) return p;
        return ECPoint::affine(p.t, -p.x);
    }

    ECPoint add(const ECPoint& p, const ECPoint& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        AlgebraicNumber lambda;
        if (p.t == q.t) {
            if ((p.x + q.x).is_zero()) return ECPoint::at_infinity();
            // tangent: both points equal with x != 0
            lambda = tangent_slope(p);
        } else {
            lambda = (q.x - p.x) / (q.t - p.t);
        }
        AlgebraicNumber t3 = lambda * lambda - a2_ - p.t - q.t;
        AlgebraicNumber x3 = -(p.x + lambda * (t3 - p.t));
        return ECPoint::affine(t3, x3);
    }

    ECPoint sub(const ECPoint& p, const ECPoint& q) const { return add(p, neg(q)); }

    ECPoint mul(long long n, const ECPoint& p) const {
        if (n == 0 || p.infinity) return ECPoint::at_infinity();
        ECPoint base = n < 0 ? neg(p) : p;
        unsigned long long k = static_cast<unsigned long long>(n < 0 ? -n : n);
        ECPoint acc = ECPoint::at_infinity();
        while (k) {
            if (k & 1ull) acc = add(acc, base);
            base = add(base, base);
            k >>= 1ull;
        }
        return acc;
    }

    AlgebraicNumber tangent_slope(const ECPoint& p) const {
        if (p.infinity || p.x.is_zero()) throw std::domain_error("tangent_slope: vertical tangent");
        return ((AlgebraicNumber(3) * p.t + AlgebraicNumber(2) * a2_) * p.t + a1_) / (AlgebraicNumber(2) * p.x);
    }

    // The vertical line t - t(p); affine divisor p + (-p), or 2p when x = 0.
    FunctionElement vertical_line(const ECPoint& p) const {
        if (p.infinity) throw std::domain_error("vertical_line at infinity");
        return fe_t_minus(*tower_, level_, p.t);
    }

    // The chord through p and q (tangent when p == q); its affine divisor is
    // p + q + (-(p+q)) when that sum is affine. Requires p+q != infinity.
    FunctionElement chord_line(const ECPoint& p, const ECPoint& q) const {
        if (p.infinity || q.infinity) throw std::domain_error("chord_line at infinity");
        AlgebraicNumber lambda;
        if (p.t == q.t) {
            if ((p.x + q.x).is_zero()) throw std::domain_error("chord_line: chord is vertical");
            lambda = tangent_slope(p);
        } else {
            lambda = (q.x - p.x) / (q.t - p.t);
        }
        AlgebraicNumber nu = p.x - lambda * p.t;
        BiPoly line = BiPoly::var_x() - BiPoly::var_t().scaled(lambda) - BiPoly::constant(nu);
        return fe_from_bipoly(*tower_, level_, line);
    }

    // Line through p with an arbitrary slope; divisor is p plus the two other
    // intersection points (which need not be rational).
    FunctionElement sloped_line(const ECPoint& p, const AlgebraicNumber& slope) const {
        if (p.infinity) throw std::domain_error("sloped_line at infinity");
        AlgebraicNumber nu = p.x - slope * p.t;
        BiPoly line = BiPoly::var_x() - BiPoly::var_t().scaled(slope) - BiPoly::constant(nu);
        return fe_from_bipoly(*tower_, level_, line);
    }

  private:
    const Tower* tower_;
    std::string level_;
    AlgebraicNumber a0_, a1_, a2_;
};

}  // namespace entire

#endif
