#ifndef ENTIRE_DIVISOR_HPP
#define ENTIRE_DIVISOR_HPP

// Finite-support integer divisors on one level, with the lattice order, the
// affine divisor (f) of a function element, and the two-argument min map
// alpha(a,b)(p) = min(v_p(a), v_p(b)).

#include <map>
#include <set>
#include <vector>

#include "entire/curve.hpp"

namespace entire {

struct Divisor {
    std::string level;
    std::map<Point, long long> entries;  // no zero entries stored

    bool is_zero() const { return entries.empty(); }

    long long at(const Point& p) const {
        auto it = entries.find(p);
        return it == entries.end() ? 0 : it->second;
    }

    void set(const Point& p, long long v) {
        if (v == 0)
            entries.erase(p);
        else
            entries[p] = v;
    }

    void add(const Point& p, long long v) { set(p, at(p) + v); }

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.level == b.level && a.entries == b.entries; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

    bool is_effective() const {
        for (const auto& [p, v] : entries) {
            (void)p;
            if (v < 0) return false;
        }
        return true;
    }

    long long degree_sum() const {
        long long s = 0;
        for (const auto& [p, v] : entries) {
            (void)p;
            s += v;
        }
        return s;
    }

    std::string str() const {
        if (entries.empty()) return "0";
        std::string out;
        for (const auto& [p, v] : entries) {
            if (!out.empty()) out += " + ";
            out += std::to_string(v) + "*" + p.str();
        }
        return out;
    }
};

struct SupportSet {
    std::string level;
    std::set<Point> points;

    bool operator==(const SupportSet& o) const { return level == o.level && points == o.points; }
};

inline void require_same_level(const Divisor& a, const Divisor& b) {
    if (a.level != b.level) throw std::invalid_argument("divisors on different levels");
}

inline Divisor divisor_zero(const std::string& level) { return Divisor{level, {}}; }

inline Divisor operator+(const Divisor& a, const Divisor& b) {
    require_same_level(a, b);
    Divisor r = a;
    for (const auto& [p, v] : b.entries) r.add(p, v);
    return r;
}

inline Divisor operator-(const Divisor& a) {
    Divisor r = a;
    for (auto& [p, v] : r.entries) {
        (void)p;
        v = -v;
    }
    return r;
}

inline Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }

inline Divisor operator*(long long n, const Divisor& a) {
    if (n == 0) return divisor_zero(a.level);
    Divisor r = a;
    for (auto& [p, v] : r.entries) {
        (void)p;
        v *= n;
    }
    return r;
}

inline Divisor divisor_min(const Divisor& a, const Divisor& b) {
    require_same_level(a, b);
    Divisor r = divisor_zero(a.level);
    for (const auto& [p, v] : a.entries) r.set(p, std::min(v, b.at(p)));
    for (const auto& [p, v] : b.entries)
        if (!a.entries.count(p)) r.set(p, std::min<long long>(0, v));
    return r;
}

inline Divisor divisor_max(const Divisor& a, const Divisor& b) { return -divisor_min(-a, -b); }

// d = d_plus - d_minus with both effective.
inline Divisor positive_part(const Divisor& d) { return divisor_max(d, divisor_zero(d.level)); }
inline Divisor negative_part(const Divisor& d) { return positive_part(-d); }

inline bool divisor_leq(const Divisor& a, const Divisor& b) { return divisor_min(a, b) == a; }

inline SupportSet support(const Divisor& d) {
    SupportSet s{d.level, {}};
    for (const auto& [p, v] : d.entries) {
        (void)p;
        (void)v;
        s.points.insert(p);
    }
    return s;
}

namespace detail_div {

// Chart point validated only against the defining equation (used to account
// for zeros sitting at chart points excluded from the affine model).
inline Point make_chart_point(const Tower& tw, const std::string& level_id, std::vector<AlgebraicNumber> coords) {
    const CurveLevel& lvl = tw.level(level_id);
    for (auto& c : coords) c = embed(tw.field, c);
    Point p{level_id, std::move(coords)};
    if (!lvl.is_base() && !lvl.equation.eval(p.x(), p.t()).is_zero())
        throw std::invalid_argument("chart point not on the curve");
    return p;
}

inline int tpoly_root_multiplicity(const TPoly& f, const AlgebraicNumber& t0) {
    int m = 0;
    TPoly q = f;
    TPoly lin(std::vector<AlgebraicNumber>{-t0, AlgebraicNumber(1)});
    while (true) {
        auto [quot, rem] = divrem(q, lin);
        if (!rem.is_zero()) break;
        q = quot;
        ++m;
    }
    return m;
}

// Zero divisor of a nonzero reduced bivariate polynomial on the curve,
// restricted to points of the affine model. Excluded chart points (those
// over infinity of a lower level) absorb their share of the resultant
// multiplicity; that share is verified, not returned.
inline std::map<Point, long long> zeros_on_level(const Tower& tw, const std::string& level_id, const BiPoly& g) {
    const CurveLevel& lvl = tw.level(level_id);
    std::map<Point, long long> out;
    if (lvl.is_base()) {
        const TPoly& poly = g.coeff_x(0);
        if (poly.degree() <= 0) return out;
        auto roots = roots_in_field(poly, tw.field);
        if (!roots.irrational_factors.empty())
            throw FiberNotRational(roots.irrational_factors.front().first,
                                   "zero of a function on '" + level_id + "'");
        for (const auto& [t0, mult] : roots.roots) out[tw.make_point(level_id, {t0})] = mult;
        return out;
    }

    TPoly res = resultant_x(lvl.equation, g);
    if (res.is_zero()) throw std::logic_error("zeros_on_level: vanishing resultant for a reduced polynomial");
    if (res.degree() == 0) return out;
    auto troots = roots_in_field(res, tw.field);
    if (!troots.irrational_factors.empty())
        throw FiberNotRational(troots.irrational_factors.front().first, "zero of a function on '" + level_id + "'");
    for (const auto& [t0, rmult] : troots.roots) {
        KPoly fiber_poly = lvl.equation.eval_t(t0);
        KPoly gx = g.eval_t(t0);
        KPoly common = gx.is_zero() ? fiber_poly : poly_gcd(fiber_poly, gx);
        auto xroots = roots_in_field(common, tw.field);
        if (!xroots.irrational_factors.empty())
            throw FiberNotRational(xroots.irrational_factors.front().first, "zero of a function on '" + level_id + "'");
        long long accounted = 0;
        for (const auto& [x0, xm] : xroots.roots) {
            (void)xm;
            Point chart = make_chart_point(tw, level_id, {t0, x0});
            int v = bipoly_order_at(tw, g, chart);
            if (v == 0) continue;
            accounted += v;
            bool in_model = true;
            try {
                tw.make_point(level_id, {t0, x0});
            } catch (const std::invalid_argument&) {
                in_model = false;
            }
            if (in_model) out[chart] = v;
        }
        if (accounted != rmult)
            throw std::logic_error("zeros_on_level: resultant multiplicity " + std::to_string(rmult) + " at t=" +
                                   t0.str() + " not matched by point valuations (" + std::to_string(accounted) + ")");
    }
    return out;
}

}  // namespace detail_div

// The affine divisor (f): p -> v_p(f).
inline Divisor principal_divisor(const Tower& tw, const FunctionElement& f) {
    if (f.is_zero()) throw std::domain_error("principal_divisor of the zero function");
    Divisor d = divisor_zero(f.level);
    for (const auto& [p, v] : detail_div::zeros_on_level(tw, f.level, f.num)) d.add(p, v);
    if (!(f.den == BiPoly::constant(AlgebraicNumber(1))))
        for (const auto& [p, v] : detail_div::zeros_on_level(tw, f.level, f.den)) d.add(p, -v);
    return d;
}

inline bool fe_is_regular(const FunctionElement& f) { return f.den.deg_x() == 0 && f.den.deg_t() == 0; }

// alpha(a, b)(p) = min(v_p(a), v_p(b)) for regular nonzero a, b; always an
// effective divisor supported on the common zeros.
inline Divisor alpha(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    if (a.level != b.level) throw std::invalid_argument("alpha: different levels");
    if (a.is_zero() || b.is_zero()) throw std::domain_error("alpha: zero argument");
    if (!fe_is_regular(a) || !fe_is_regular(b))
        throw std::invalid_argument("alpha: arguments must be regular (no affine poles)");
    const CurveLevel& lvl = tw.level(a.level);
    Divisor d = divisor_zero(a.level);

    if (lvl.is_base()) {
        TPoly g = poly_gcd(a.num.coeff_x(0), b.num.coeff_x(0));
        if (g.degree() <= 0) return d;
        auto roots = roots_in_field(g, tw.field);
        if (!roots.irrational_factors.empty())
            throw FiberNotRational(roots.irrational_factors.front().first, "common zero on '" + a.level + "'");
        for (const auto& [t0, mult] : roots.roots) {
            (void)mult;
            Point p = tw.make_point(a.level, {t0});
            d.set(p, std::min(detail_div::tpoly_root_multiplicity(a.num.coeff_x(0), t0),
                              detail_div::tpoly_root_multiplicity(b.num.coeff_x(0), t0)));
        }
        return d;
    }

    TPoly ra = resultant_x(lvl.equation, a.num);
    TPoly rb = resultant_x(lvl.equation, b.num);
    TPoly g = poly_gcd(ra, rb);
    if (g.degree() <= 0) return d;
    auto troots = roots_in_field(g, tw.field);
    // A degree >= 2 factor of the gcd may be a genuine irrational common zero
    // or two unrelated conjugate zeros sharing a minimal polynomial; we do
    // not extend the field to decide, so reject either way.
    if (!troots.irrational_factors.empty())
        throw FiberNotRational(troots.irrational_factors.front().first, "common zero candidates on '" + a.level + "'");
    for (const auto& [t0, tm] : troots.roots) {
        (void)tm;
        KPoly fiber_poly = lvl.equation.eval_t(t0);
        KPoly ax = a.num.eval_t(t0);
        KPoly bx = b.num.eval_t(t0);
        KPoly common = fiber_poly;
        if (!ax.is_zero()) common = poly_gcd(common, ax);
        if (!bx.is_zero()) common = poly_gcd(common, bx);
        if (common.degree() == 0) continue;
        auto xroots = roots_in_field(common, tw.field);
        if (!xroots.irrational_factors.empty())
            throw FiberNotRational(xroots.irrational_factors.front().first, "common zero on '" + a.level + "'");
        for (const auto& [x0, xm] : xroots.roots) {
            (void)xm;
            Point p;
            try {
                p = tw.make_point(a.level, {t0, x0});
            } catch (const std::invalid_argument&) {
                continue;  // excluded chart point
            }
            int va = bipoly_order_at(tw, a.num, p);
            int vb = bipoly_order_at(tw, b.num, p);
            int m = std::min(va, vb);
            if (m > 0) d.set(p, m);
        }
    }
    return d;
}

// Divisor of a function element as a pair of maps, for callers that want to
// distinguish zeros from poles cheaply.
inline std::pair<Divisor, Divisor> zero_pole_divisors(const Tower& tw, const FunctionElement& f) {
    Divisor d = principal_divisor(tw, f);
    return {positive_part(d), negative_part(d)};
}

}  // namespace entire

#endif
