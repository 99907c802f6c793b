#ifndef ENTIRE_CURVE_HPP
#define ENTIRE_CURVE_HPP

// The tower of affine curves over the t-line: the base line itself and
// Weierstrass plane covers x^2 = cubic(t), with declared morphisms between
// levels. Points are affine and smooth; a point of a covering level must map
// to an affine point all the way down, so chart points sitting over a lower
// level's point at infinity are rejected at construction.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entire/bipoly.hpp"
#include "entire/nffactor.hpp"
#include "entire/series.hpp"

namespace entire {

struct FiberNotRational : std::runtime_error {
    KPoly needed;      // irreducible polynomial whose root would be required
    std::string where;
    FiberNotRational(KPoly poly, std::string context)
        : std::runtime_error("fiber not rational over the working field (" + context + ")"),
          needed(std::move(poly)),
          where(std::move(context)) {}
};

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

enum class LevelKind { BaseLine, PlaneCover };

struct CurveLevel {
    std::string id;
    LevelKind kind = LevelKind::BaseLine;
    std::string parent;  // empty for the base line
    int genus = 0;
    BiPoly equation;     // x^2 - cubic(t) for plane covers; unused for the base line
    TPoly cubic;         // the right-hand side, monic of degree 3
    BiPoly eq_dx, eq_dt;

    bool is_base() const { return kind == LevelKind::BaseLine; }
    int coord_count() const { return is_base() ? 1 : 2; }
};

using CurveLevelPtr = std::shared_ptr<const CurveLevel>;

struct Point {
    std::string level;
    std::vector<AlgebraicNumber> coords;  // (t) on the base line, (t, x) on covers

    const AlgebraicNumber& t() const { return coords[0]; }
    const AlgebraicNumber& x() const {
        if (coords.size() < 2) throw std::logic_error("Point::x on a base-line point");
        return coords[1];
    }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.level != b.level || a.coords.size() != b.coords.size()) return false;
        for (size_t i = 0; i < a.coords.size(); ++i)
            if (a.coords[i] != b.coords[i]) return false;
        return true;
    }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] < b.coords[i]) return true;
            if (b.coords[i] < a.coords[i]) return false;
        }
        return false;
    }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ", ";
            out += coords[i].str();
        }
        return out + ")";
    }
};

// An element of the function field of one level, as a reduced fraction of
// bivariate polynomials (x-degree below deg_x of the defining equation).
struct FunctionElement {
    std::string level;
    BiPoly num, den;

    bool is_zero() const { return num.is_zero(); }
    std::string str() const {
        std::string n = num.str();
        if (den == BiPoly::constant(AlgebraicNumber(1))) return n;
        return "(" + n + ")/(" + den.str() + ")";
    }
};

struct CoverMap {
    std::string id;      // "source->target"
    std::string source;
    std::string target;
    std::vector<FunctionElement> formulas;  // target coordinates as functions on the source
    int degree = 0;
};

struct TowerParams {
    long torsion_bound = 60;   // order search bound over proper number fields
    int series_cap = 1024;     // precision cap for valuation expansions
    long span_bound = 8;       // coefficient bound for span searches
};

class Tower {
  public:
    FieldPtr field;  // null = Q
    TowerParams params;

    const CurveLevel& level(const std::string& id) const {
        auto it = levels_.find(id);
        if (it == levels_.end()) throw std::invalid_argument("unknown level '" + id + "'");
        return *it->second;
    }
    bool has_level(const std::string& id) const { return levels_.count(id) != 0; }

    const std::vector<CoverMap>& covers() const { return covers_; }

    const CoverMap& cover(const std::string& source, const std::string& target) const {
        for (const auto& c : covers_)
            if (c.source == source && c.target == target) return c;
        throw std::invalid_argument("no declared cover " + source + " -> " + target);
    }
    bool has_cover(const std::string& source, const std::string& target) const {
        for (const auto& c : covers_)
            if (c.source == source && c.target == target) return true;
        return false;
    }

    const std::map<std::string, Point>& named_points() const { return named_points_; }
    const Point& named_point(const std::string& name) const {
        auto it = named_points_.find(name);
        if (it == named_points_.end()) throw std::invalid_argument("unknown named point '" + name + "'");
        return it->second;
    }

    void add_base_level(const std::string& id) {
        auto lvl = std::make_shared<CurveLevel>();
        lvl->id = id;
        lvl->kind = LevelKind::BaseLine;
        lvl->genus = 0;
        insert_level(std::move(lvl));
    }

    // equation: x^2 = cubic(t) with cubic monic of degree 3 and squarefree,
    // so every affine chart point is smooth.
    void add_weierstrass_level(const std::string& id, const std::string& parent, const TPoly& cubic) {
        if (!has_level(parent)) throw std::invalid_argument("level '" + id + "': unknown parent '" + parent + "'");
        if (cubic.degree() != 3 || !(embed(field, cubic.lead()) == AlgebraicNumber(1)))
            throw std::invalid_argument("level '" + id + "': right-hand side must be a monic cubic in t");
        KPoly sq = poly_gcd(cubic, cubic.derivative());
        if (sq.degree() != 0)
            throw std::invalid_argument("level '" + id + "': cubic must be squarefree (affine model smooth)");
        auto lvl = std::make_shared<CurveLevel>();
        lvl->id = id;
        lvl->kind = LevelKind::PlaneCover;
        lvl->parent = parent;
        lvl->genus = 1;
        lvl->cubic = cubic;
        lvl->equation = BiPoly::var_x() * BiPoly::var_x() - BiPoly::from_tpoly(cubic);
        lvl->eq_dx = lvl->equation.derivative_x();
        lvl->eq_dt = lvl->equation.derivative_t();
        insert_level(std::move(lvl));
    }

    void add_cover(CoverMap c, const std::optional<Point>& degree_check_point = std::nullopt);

    Point make_point(const std::string& level_id, std::vector<AlgebraicNumber> coords) const;

    void add_named_point(const std::string& name, const Point& p) { named_points_[name] = p; }

    std::vector<std::string> level_ids() const {
        std::vector<std::string> out;
        for (const auto& [id, lvl] : levels_) {
            (void)lvl;
            out.push_back(id);
        }
        return out;
    }

  private:
    void insert_level(std::shared_ptr<CurveLevel> lvl) {
        if (levels_.count(lvl->id)) throw std::invalid_argument("duplicate level id '" + lvl->id + "'");
        levels_[lvl->id] = std::move(lvl);
    }

    std::map<std::string, CurveLevelPtr> levels_;
    std::vector<CoverMap> covers_;
    std::map<std::string, Point> named_points_;
};

// ---------- function element helpers ----------

inline FunctionElement fe_reduce(const Tower& tw, FunctionElement f) {
    const CurveLevel& lvl = tw.level(f.level);
    if (!lvl.is_base()) {
        f.num = reduce_mod_monic_x(f.num, lvl.equation);
        f.den = reduce_mod_monic_x(f.den, lvl.equation);
    }
    if (f.den.is_zero()) throw std::invalid_argument("function element: denominator vanishes on the curve");
    if (lvl.is_base() && (f.num.deg_x() > 0 || f.den.deg_x() > 0))
        throw std::invalid_argument("function element on the base line must not involve x");
    // scale so the leading denominator coefficient is 1
    const TPoly& lead_t = f.den.px.lead();
    AlgebraicNumber lead = lead_t.lead();
    AlgebraicNumber inv = lead.inverse();
    f.num = f.num.scaled(inv);
    f.den = f.den.scaled(inv);
    return f;
}

inline FunctionElement fe_from_bipoly(const Tower& tw, const std::string& level, const BiPoly& num,
                                      const BiPoly& den = BiPoly::constant(AlgebraicNumber(1))) {
    return fe_reduce(tw, FunctionElement{level, num, den});
}

inline FunctionElement fe_constant(const Tower& tw, const std::string& level, const AlgebraicNumber& a) {
    return fe_from_bipoly(tw, level, BiPoly::constant(a));
}

inline FunctionElement fe_mul(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    if (a.level != b.level) throw std::invalid_argument("function elements on different levels");
    return fe_reduce(tw, FunctionElement{a.level, a.num * b.num, a.den * b.den});
}

inline FunctionElement fe_div(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    if (a.level != b.level) throw std::invalid_argument("function elements on different levels");
    if (b.is_zero()) throw std::domain_error("function element division by zero");
    return fe_reduce(tw, FunctionElement{a.level, a.num * b.den, a.den * b.num});
}

inline FunctionElement fe_add(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    if (a.level != b.level) throw std::invalid_argument("function elements on different levels");
    return fe_reduce(tw, FunctionElement{a.level, a.num * b.den + b.num * a.den, a.den * b.den});
}

inline FunctionElement fe_sub(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    return fe_add(tw, a, fe_reduce(tw, FunctionElement{b.level, -b.num, b.den}));
}

inline FunctionElement fe_pow(const Tower& tw, const FunctionElement& a, long e) {
    FunctionElement r = fe_constant(tw, a.level, AlgebraicNumber(1));
    FunctionElement base = a;
    bool invert = e < 0;
    unsigned long k = static_cast<unsigned long>(invert ? -e : e);
    while (k) {
        if (k & 1ul) r = fe_mul(tw, r, base);
        base = fe_mul(tw, base, base);
        k >>= 1ul;
    }
    if (invert) return fe_div(tw, fe_constant(tw, a.level, AlgebraicNumber(1)), r);
    return r;
}

inline bool fe_equal(const Tower& tw, const FunctionElement& a, const FunctionElement& b) {
    if (a.level != b.level) return false;
    const CurveLevel& lvl = tw.level(a.level);
    BiPoly cross = a.num * b.den - b.num * a.den;
    if (!lvl.is_base()) cross = reduce_mod_monic_x(cross, lvl.equation);
    return cross.is_zero();
}

// Is f defined at P, and if so what is its value?
inline std::optional<AlgebraicNumber> fe_try_eval(const FunctionElement& f, const Point& p) {
    AlgebraicNumber xv = p.coords.size() > 1 ? p.x() : AlgebraicNumber(0);
    AlgebraicNumber dv = f.den.eval(xv, p.t());
    if (dv.is_zero()) return std::nullopt;
    return f.num.eval(xv, p.t()) / dv;
}

inline AlgebraicNumber fe_eval(const FunctionElement& f, const Point& p) {
    auto v = fe_try_eval(f, p);
    if (!v) throw std::domain_error("function element denominator vanishes at " + p.str());
    return *v;
}

// t - t0, and x - x0, as function elements.
inline FunctionElement fe_t_minus(const Tower& tw, const std::string& level, const AlgebraicNumber& t0) {
    return fe_from_bipoly(tw, level, BiPoly::var_t() - BiPoly::constant(t0));
}
inline FunctionElement fe_x_minus(const Tower& tw, const std::string& level, const AlgebraicNumber& x0) {
    return fe_from_bipoly(tw, level, BiPoly::var_x() - BiPoly::constant(x0));
}

// ---------- cover plumbing ----------

// Composition with the cover formulas: a function on the target becomes a
// function on the source.
inline FunctionElement pullback_function(const Tower& tw, const CoverMap& c, const FunctionElement& f) {
    if (f.level != c.target) throw std::invalid_argument("pullback_function: element not on the cover target");
    const CurveLevel& tgt = tw.level(c.target);
    BiPoly nt = c.formulas[0].num, dt = c.formulas[0].den;
    BiPoly nx = BiPoly::constant(AlgebraicNumber(0)), dx = BiPoly::constant(AlgebraicNumber(1));
    if (tgt.coord_count() == 2) {
        nx = c.formulas[1].num;
        dx = c.formulas[1].den;
    }
    auto [num_n, num_d] = substitute_rational(f.num, nx, dx, nt, dt);
    auto [den_n, den_d] = substitute_rational(f.den, nx, dx, nt, dt);
    return fe_reduce(tw, FunctionElement{c.source, num_n * den_d, num_d * den_n});
}

// Image of a source point under the cover.
inline Point push_point(const Tower& tw, const CoverMap& c, const Point& p) {
    if (p.level != c.source) throw std::invalid_argument("push_point: point not on the cover source");
    std::vector<AlgebraicNumber> coords;
    coords.reserve(c.formulas.size());
    for (const auto& f : c.formulas) coords.push_back(fe_eval(f, p));
    return tw.make_point(c.target, std::move(coords));
}

// ---------- local analysis ----------

inline FunctionElement uniformizer(const Tower& tw, const Point& p) {
    const CurveLevel& lvl = tw.level(p.level);
    if (lvl.is_base()) return fe_t_minus(tw, p.level, p.t());
    AlgebraicNumber fx = lvl.eq_dx.eval(p.x(), p.t());
    if (!fx.is_zero()) return fe_t_minus(tw, p.level, p.t());
    return fe_x_minus(tw, p.level, p.x());
}

// Power series expansion of (x(u), t(u)) along the local branch at a smooth
// point, with u the uniformizer.
inline std::pair<Series, Series> local_branch(const Tower& tw, const Point& p, int prec) {
    const CurveLevel& lvl = tw.level(p.level);
    if (lvl.is_base()) {
        Series ts = Series::constant(p.t(), prec) + Series::variable(prec);
        return {Series::constant(AlgebraicNumber(0), prec), ts};
    }
    AlgebraicNumber fx = lvl.eq_dx.eval(p.x(), p.t());
    bool t_is_uniformizer = !fx.is_zero();
    Series known = t_is_uniformizer ? Series::constant(p.t(), prec) + Series::variable(prec)
                                    : Series::constant(p.x(), prec) + Series::variable(prec);
    Series unknown = Series::constant(t_is_uniformizer ? p.x() : p.t(), prec);
    // Newton iteration; each pass doubles the number of correct terms.
    int correct = 1;
    while (correct < prec) {
        Series fval = t_is_uniformizer ? eval_bipoly_at_series(lvl.equation, unknown, known)
                                       : eval_bipoly_at_series(lvl.equation, known, unknown);
        Series fder = t_is_uniformizer ? eval_bipoly_at_series(lvl.eq_dx, unknown, known)
                                       : eval_bipoly_at_series(lvl.eq_dt, known, unknown);
        unknown = unknown - fval * fder.inverse();
        correct *= 2;
    }
    Series xs = t_is_uniformizer ? unknown : known;
    Series ts = t_is_uniformizer ? known : unknown;
    return {xs, ts};
}

// Order of vanishing at P of a bivariate polynomial restricted to the curve,
// by series expansion with doubling precision.
inline int bipoly_order_at(const Tower& tw, const BiPoly& g, const Point& p) {
    if (g.is_zero()) throw std::domain_error("bipoly_order_at: zero polynomial");
    const CurveLevel& lvl = tw.level(p.level);
    AlgebraicNumber xv = lvl.is_base() ? AlgebraicNumber(0) : p.x();
    if (!g.eval(xv, p.t()).is_zero()) return 0;
    for (int prec = 8; prec <= tw.params.series_cap; prec *= 2) {
        auto [xs, ts] = local_branch(tw, p, prec);
        Series val = eval_bipoly_at_series(g, xs, ts);
        int ord = val.order();
        if (ord >= 0) return ord;
    }
    throw PrecisionExhausted("valuation did not resolve within the series cap at " + p.str());
}

// v_P(f) for a nonzero function element.
inline int valuation(const Tower& tw, const FunctionElement& f, const Point& p) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function is undefined");
    const CurveLevel& lvl = tw.level(p.level);
    if (lvl.is_base()) {
        // multiplicity of (t - t0) in numerator and denominator
        auto mult = [&](const TPoly& poly) {
            int m = 0;
            TPoly q = poly;
            TPoly lin(std::vector<AlgebraicNumber>{-p.t(), AlgebraicNumber(1)});
            while (true) {
                auto [quot, rem] = divrem(q, lin);
                if (!rem.is_zero()) break;
                q = quot;
                ++m;
            }
            return m;
        };
        return mult(f.num.coeff_x(0)) - mult(f.den.coeff_x(0));
    }
    return bipoly_order_at(tw, f.num, p) - bipoly_order_at(tw, f.den, p);
}

// ---------- fibers ----------

struct FiberPoint {
    Point point;
    int ramification = 0;
};

// All points of the cover source lying over P, with ramification degrees.
// Completeness is certified by the ramification degrees summing to the cover
// degree; otherwise FiberNotRational reports a polynomial whose root would
// enlarge the working field enough to continue.
inline std::vector<FiberPoint> solve_fiber(const Tower& tw, const CoverMap& c, const Point& p) {
    if (p.level != c.target) throw std::invalid_argument("solve_fiber: point not on the cover target");
    const CurveLevel& src = tw.level(c.source);
    const CurveLevel& tgt = tw.level(c.target);

    // Constraint polynomials A_i - coord_i * B_i on the source.
    std::vector<BiPoly> constraints;
    for (size_t i = 0; i < c.formulas.size(); ++i) {
        BiPoly g = c.formulas[i].num - c.formulas[i].den.scaled(p.coords[i]);
        if (!src.is_base()) g = reduce_mod_monic_x(g, src.equation);
        if (!g.is_zero()) constraints.push_back(g);
    }
    if (constraints.empty()) throw std::logic_error("solve_fiber: cover formulas are constant");

    // Eliminate x (on a base-line source there is no x; constraints are in t).
    TPoly elim;
    if (src.is_base()) {
        elim = constraints[0].coeff_x(0);
    } else {
        elim = resultant_x(src.equation, constraints[0]);
    }
    if (elim.is_zero()) throw std::logic_error("solve_fiber: degenerate elimination");

    auto troots = roots_in_field(elim, tw.field);
    std::optional<KPoly> blocker;
    if (!troots.irrational_factors.empty()) blocker = troots.irrational_factors.front().first;

    std::vector<FiberPoint> fiber;
    FunctionElement uni = uniformizer(tw, p);
    for (const auto& [t0, tmult] : troots.roots) {
        (void)tmult;
        std::vector<AlgebraicNumber> xcands;
        if (src.is_base()) {
            xcands.push_back(AlgebraicNumber(0));  // unused
        } else {
            KPoly common = src.equation.eval_t(t0);
            for (const auto& g : constraints) {
                KPoly gx = g.eval_t(t0);
                if (!gx.is_zero()) common = poly_gcd(common, gx);
            }
            if (common.degree() == 0) continue;  // no curve point over this root satisfies all constraints
            auto xroots = roots_in_field(common, tw.field);
            if (!xroots.irrational_factors.empty() && !blocker) blocker = xroots.irrational_factors.front().first;
            for (const auto& [x0, xm] : xroots.roots) {
                (void)xm;
                xcands.push_back(x0);
            }
        }
        for (const auto& x0 : xcands) {
            std::vector<AlgebraicNumber> coords;
            coords.push_back(t0);
            if (!src.is_base()) coords.push_back(x0);
            Point q;
            try {
                q = tw.make_point(c.source, coords);
            } catch (const std::invalid_argument&) {
                continue;  // not an affine point of the source model (over infinity below, or off-curve)
            }
            // verify the image
            bool matches = true;
            for (size_t i = 0; i < c.formulas.size(); ++i) {
                auto v = fe_try_eval(c.formulas[i], q);
                if (!v || !(*v == p.coords[i])) {
                    matches = false;
                    break;
                }
            }
            if (!matches) continue;
            FunctionElement pulled = pullback_function(tw, c, uni);
            fiber.push_back(FiberPoint{q, valuation(tw, pulled, q)});
        }
    }
    (void)tgt;

    int total = 0;
    for (const auto& fp : fiber) total += fp.ramification;
    if (total == c.degree) return fiber;
    if (blocker) throw FiberNotRational(*blocker, "fiber of " + c.id + " over " + p.str());
    throw std::logic_error("solve_fiber: fiber incomplete over " + p.str() + " but no extension candidate found");
}

// ---------- Tower member definitions needing the machinery above ----------

inline Point Tower::make_point(const std::string& level_id, std::vector<AlgebraicNumber> coords) const {
    const CurveLevel& lvl = level(level_id);
    if (static_cast<int>(coords.size()) != lvl.coord_count())
        throw std::invalid_argument("point on '" + level_id + "': expected " + std::to_string(lvl.coord_count()) +
                                    " coordinates");
    for (auto& c : coords) c = embed(field, c);
    Point p{level_id, std::move(coords)};
    if (!lvl.is_base()) {
        if (!lvl.equation.eval(p.x(), p.t()).is_zero())
            throw std::invalid_argument("point " + p.str() + " does not satisfy the defining equation of '" + level_id + "'");
        // squarefree cubic keeps the affine model smooth; assert anyway
        if (lvl.eq_dx.eval(p.x(), p.t()).is_zero() && lvl.eq_dt.eval(p.x(), p.t()).is_zero())
            throw std::invalid_argument("point " + p.str() + " is singular on '" + level_id + "'");
    }
    // The point must lie over affine points all the way down: every declared
    // cover leaving this level must be defined at it.
    for (const auto& c : covers_) {
        if (c.source != level_id) continue;
        std::vector<AlgebraicNumber> image;
        bool defined = true;
        for (const auto& f : c.formulas) {
            auto v = fe_try_eval(f, p);
            if (!v) {
                defined = false;
                break;
            }
            image.push_back(*v);
        }
        if (!defined)
            throw std::invalid_argument("point " + p.str() + " lies over infinity of '" + c.target +
                                        "' and is outside the affine model of '" + level_id + "'");
        make_point(c.target, image);  // throws if the image is bad
    }
    return p;
}

inline void Tower::add_cover(CoverMap c, const std::optional<Point>& degree_check_point) {
    const CurveLevel& src = level(c.source);
    const CurveLevel& tgt = level(c.target);
    if (c.id.empty()) c.id = c.source + "->" + c.target;
    if (static_cast<int>(c.formulas.size()) != tgt.coord_count())
        throw std::invalid_argument("cover " + c.id + ": formula count does not match target coordinates");
    for (const auto& f : c.formulas)
        if (f.level != c.source) throw std::invalid_argument("cover " + c.id + ": formulas must live on the source level");
    if (c.degree < 1) throw std::invalid_argument("cover " + c.id + ": degree must be positive");

    // The formulas must satisfy the target equation modulo the source equation.
    if (!tgt.is_base()) {
        const auto& ft = c.formulas[0];
        const auto& fx = c.formulas[1];
        auto [num, den] = substitute_rational(tgt.equation, fx.num, fx.den, ft.num, ft.den);
        (void)den;
        BiPoly reduced = src.is_base() ? num : reduce_mod_monic_x(num, src.equation);
        if (!reduced.is_zero())
            throw std::invalid_argument("cover " + c.id + ": formulas do not satisfy the target equation");
    }

    // Degree verification. A cover of the base line whose formula is exactly
    // t has degree deg_x of the source equation. Otherwise a sample point
    // with a fully split fiber measures the degree.
    bool verified = false;
    if (tgt.is_base() && !src.is_base()) {
        BiPoly tvar = BiPoly::var_t();
        if (c.formulas[0].num == tvar && c.formulas[0].den == BiPoly::constant(AlgebraicNumber(1))) {
            if (c.degree != src.equation.deg_x())
                throw std::invalid_argument("cover " + c.id + ": declared degree " + std::to_string(c.degree) +
                                            " but the source has x-degree " + std::to_string(src.equation.deg_x()));
            verified = true;
        }
    }
    covers_.push_back(c);  // registered before fiber solving so point checks see it
    if (!verified) {
        if (!degree_check_point)
            throw std::invalid_argument("cover " + c.id + ": degree not verifiable; provide a degree check point");
        try {
            solve_fiber(*this, covers_.back(), *degree_check_point);
        } catch (const std::exception& e) {
            covers_.pop_back();
            throw std::invalid_argument("cover " + c.id + ": degree verification failed at " +
                                        degree_check_point->str() + ": " + e.what());
        }
    }
}

}  // namespace entire

#endif
