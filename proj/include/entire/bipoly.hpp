#ifndef ENTIRE_BIPOLY_HPP
#define ENTIRE_BIPOLY_HPP

// Bivariate polynomials in (x, t) over the working field, stored densely as
// polynomials in x whose coefficients are polynomials in t.

#include <string>
#include <utility>
#include <vector>

#include "entire/numfield.hpp"
#include "entire/resultant.hpp"

namespace entire {

using TPoly = Poly<AlgebraicNumber>;  // univariate in t

struct BiPoly {
    Poly<TPoly> px;  // coeff of x^i is a polynomial in t

    BiPoly() = default;
    explicit BiPoly(Poly<TPoly> p) : px(std::move(p)) {}

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const AlgebraicNumber& a) { return BiPoly(Poly<TPoly>::constant(TPoly::constant(a))); }
    static BiPoly var_x() { return BiPoly(Poly<TPoly>(std::vector<TPoly>{TPoly(), TPoly(1)})); }
    static BiPoly var_t() { return BiPoly(Poly<TPoly>::constant(TPoly::variable())); }
    static BiPoly from_tpoly(const TPoly& p) { return BiPoly(Poly<TPoly>::constant(p)); }

    bool is_zero() const { return px.is_zero(); }
    int deg_x() const { return px.degree(); }
    int deg_t() const {
        int d = -1;
        for (const auto& c : px.c) d = std::max(d, c.degree());
        return d;
    }

    TPoly coeff_x(int i) const { return px.coeff(i); }

    bool operator==(const BiPoly& o) const { return px == o.px; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const { return BiPoly(-px); }
    BiPoly operator+(const BiPoly& o) const { return BiPoly(px + o.px); }
    BiPoly operator-(const BiPoly& o) const { return BiPoly(px - o.px); }
    BiPoly operator*(const BiPoly& o) const { return BiPoly(px * o.px); }

    BiPoly scaled(const AlgebraicNumber& a) const { return BiPoly(px.scaled(TPoly::constant(a))); }

    BiPoly pow(unsigned e) const {
        BiPoly r = constant(AlgebraicNumber(1));
        BiPoly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    // Substitute exact values.
    AlgebraicNumber eval(const AlgebraicNumber& xv, const AlgebraicNumber& tv) const {
        AlgebraicNumber acc(0);
        for (size_t i = px.c.size(); i-- > 0;) acc = acc * xv + px.c[i].eval(tv);
        return acc;
    }

    // Substitute t = tv, leaving a polynomial in x.
    KPoly eval_t(const AlgebraicNumber& tv) const {
        std::vector<AlgebraicNumber> c(px.c.size());
        for (size_t i = 0; i < px.c.size(); ++i) c[i] = px.c[i].eval(tv);
        return KPoly(std::move(c));
    }

    // Substitute x = xv, leaving a polynomial in t.
    TPoly eval_x(const AlgebraicNumber& xv) const {
        TPoly acc;
        for (size_t i = px.c.size(); i-- > 0;) acc = acc.scaled(xv) + px.c[i];
        return acc;
    }

    BiPoly derivative_x() const { return BiPoly(px.derivative()); }

    BiPoly derivative_t() const {
        Poly<TPoly> r = px;
        for (auto& c : r.c) c = c.derivative();
        r.normalize();
        return BiPoly(r);
    }

    std::string str(const std::string& xv = "x", const std::string& tv = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = 0; i <= deg_x(); ++i) {
            const TPoly c = px.coeff(i);
            for (int j = 0; j <= c.degree(); ++j) {
                AlgebraicNumber a = c.coeff(j);
                if (a.is_zero()) continue;
                std::string term;
                std::string coeff = a.str();
                bool needs_parens = coeff.find(' ') != std::string::npos;
                if (needs_parens) coeff = "(" + coeff + ")";
                std::string mono;
                if (i > 0) mono += xv + (i > 1 ? "^" + std::to_string(i) : "");
                if (j > 0) {
                    if (!mono.empty()) mono += "*";
                    mono += tv + (j > 1 ? "^" + std::to_string(j) : "");
                }
                if (mono.empty())
                    term = coeff;
                else if (coeff == "1")
                    term = mono;
                else if (coeff == "-1")
                    term = "-" + mono;
                else
                    term = coeff + "*" + mono;
                if (out.empty())
                    out = term;
                else if (term[0] == '-')
                    out += " - " + term.substr(1);
                else
                    out += " + " + term;
            }
        }
        return out.empty() ? "0" : out;
    }
};

// Remainder of a modulo m, where m is monic as a polynomial in x.
inline BiPoly reduce_mod_monic_x(const BiPoly& a, const BiPoly& m) {
    if (m.px.is_zero() || !(m.px.lead() == TPoly(1))) throw std::invalid_argument("reduce_mod_monic_x: modulus not monic in x");
    return BiPoly(divrem_monic(a.px, m.px).second);
}

// Resultant eliminating x: a polynomial in t.
inline TPoly resultant_x(const BiPoly& a, const BiPoly& b) { return resultant_bivariate(a.px, b.px); }

// Resultant eliminating t: a polynomial in x.
inline TPoly resultant_t(const BiPoly& a, const BiPoly& b) {
    auto transpose = [](const BiPoly& f) {
        int dt = f.deg_t(), dx = f.deg_x();
        std::vector<TPoly> rows(static_cast<size_t>(dt) + 1);
        for (int j = 0; j <= dt; ++j) {
            std::vector<AlgebraicNumber> c(static_cast<size_t>(dx) + 1);
            for (int i = 0; i <= dx; ++i) c[static_cast<size_t>(i)] = f.px.coeff(i).coeff(j);
            rows[static_cast<size_t>(j)] = TPoly(std::move(c));
        }
        return Poly<TPoly>(std::move(rows));
    };
    if (a.is_zero() || b.is_zero()) return TPoly();
    return resultant_bivariate(transpose(a), transpose(b));
}

// Substitutes rational expressions x := nx/dx, t := nt/dt into f, returning
// (numerator, denominator) with denominator dx^degx * dt^degt.
inline std::pair<BiPoly, BiPoly> substitute_rational(const BiPoly& f, const BiPoly& nx, const BiPoly& dx,
                                                     const BiPoly& nt, const BiPoly& dt) {
    int degx = std::max(f.deg_x(), 0), degt = std::max(f.deg_t(), 0);
    std::vector<BiPoly> nx_pow(static_cast<size_t>(degx) + 1), dx_pow(static_cast<size_t>(degx) + 1);
    std::vector<BiPoly> nt_pow(static_cast<size_t>(degt) + 1), dt_pow(static_cast<size_t>(degt) + 1);
    nx_pow[0] = dx_pow[0] = nt_pow[0] = dt_pow[0] = BiPoly::constant(AlgebraicNumber(1));
    for (int i = 1; i <= degx; ++i) {
        nx_pow[static_cast<size_t>(i)] = nx_pow[static_cast<size_t>(i - 1)] * nx;
        dx_pow[static_cast<size_t>(i)] = dx_pow[static_cast<size_t>(i - 1)] * dx;
    }
    for (int j = 1; j <= degt; ++j) {
        nt_pow[static_cast<size_t>(j)] = nt_pow[static_cast<size_t>(j - 1)] * nt;
        dt_pow[static_cast<size_t>(j)] = dt_pow[static_cast<size_t>(j - 1)] * dt;
    }
    BiPoly numer;
    for (int i = 0; i <= f.deg_x(); ++i) {
        const TPoly ci = f.px.coeff(i);
        for (int j = 0; j <= ci.degree(); ++j) {
            AlgebraicNumber a = ci.coeff(j);
            if (a.is_zero()) continue;
            BiPoly term = BiPoly::constant(a) * nx_pow[static_cast<size_t>(i)] * dx_pow[static_cast<size_t>(degx - i)] *
                          nt_pow[static_cast<size_t>(j)] * dt_pow[static_cast<size_t>(degt - j)];
            numer = numer + term;
        }
    }
    return {numer, dx_pow[static_cast<size_t>(degx)] * dt_pow[static_cast<size_t>(degt)]};
}

}  // namespace entire

#endif
