#ifndef ENTIRE_SERIES_HPP
#define ENTIRE_SERIES_HPP

// Truncated power series over the working field, used for local expansions
// at smooth points. Precision is tracked pessimistically: an operation's
// result is only trusted up to the weakest input precision.

#include <stdexcept>
#include <string>
#include <vector>

#include "entire/bipoly.hpp"
#include "entire/numfield.hpp"

namespace entire {

struct Series {
    std::string var = "u";
    std::vector<AlgebraicNumber> c;  // c[i] is the coefficient of var^i; size == prec
    // Invariant: c.size() == precision (number of known coefficients).

    Series() = default;
    Series(std::string v, int prec) : var(std::move(v)), c(static_cast<size_t>(prec)) {
        if (prec <= 0) throw std::invalid_argument("Series: precision must be positive");
    }

    int precision() const { return static_cast<int>(c.size()); }

    static Series constant(const AlgebraicNumber& a, int prec, std::string v = "u") {
        Series s(std::move(v), prec);
        s.c[0] = a;
        return s;
    }

    static Series variable(int prec, std::string v = "u") {
        Series s(std::move(v), prec);
        if (prec > 1) s.c[1] = AlgebraicNumber(1);
        return s;
    }

    // Order of vanishing among the known coefficients; -1 if all known
    // coefficients are zero.
    int order() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Series truncated(int prec) const {
        Series r = *this;
        if (prec < precision()) r.c.resize(static_cast<size_t>(prec));
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend Series aligned_binary(const Series& a, const Series& b, bool subtract) {
        if (a.var != b.var) throw std::invalid_argument("Series: variable mismatch");
        size_t n = std::min(a.c.size(), b.c.size());
        Series r(a.var, static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) r.c[i] = subtract ? a.c[i] - b.c[i] : a.c[i] + b.c[i];
        return r;
    }

    Series operator+(const Series& o) const { return aligned_binary(*this, o, false); }
    Series operator-(const Series& o) const { return aligned_binary(*this, o, true); }

    Series operator*(const Series& o) const {
        if (var != o.var) throw std::invalid_argument("Series: variable mismatch");
        size_t n = std::min(c.size(), o.c.size());
        Series r(var, static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; i + j < n; ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        return r;
    }

    Series scaled(const AlgebraicNumber& a) const {
        Series r = *this;
        for (auto& v : r.c) v = v * a;
        return r;
    }

    // Multiplicative inverse; requires a unit constant term.
    Series inverse() const {
        if (c.empty() || c[0].is_zero()) throw std::domain_error("Series::inverse: constant term is zero");
        Series r(var, precision());
        AlgebraicNumber inv0 = c[0].inverse();
        r.c[0] = inv0;
        for (size_t k = 1; k < c.size(); ++k) {
            AlgebraicNumber acc(0);
            for (size_t i = 1; i <= k; ++i) acc = acc + c[i] * r.c[k - i];
            r.c[k] = -(acc * inv0);
        }
        return r;
    }
};

inline Series eval_poly_at_series(const TPoly& p, const Series& s) {
    Series acc = Series::constant(AlgebraicNumber(0), s.precision(), s.var);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * s + Series::constant(p.c[i], s.precision(), s.var);
    return acc;
}

inline Series eval_bipoly_at_series(const BiPoly& f, const Series& xs, const Series& ts) {
    if (xs.var != ts.var) throw std::invalid_argument("eval_bipoly_at_series: variable mismatch");
    int prec = std::min(xs.precision(), ts.precision());
    Series acc = Series::constant(AlgebraicNumber(0), prec, xs.var);
    for (size_t i = f.px.c.size(); i-- > 0;) acc = acc * xs + eval_poly_at_series(f.px.c[i], ts).truncated(prec);
    return acc;
}

}  // namespace entire

#endif
