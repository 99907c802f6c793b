#ifndef ENTIRE_NFFACTOR_HPP
#define ENTIRE_NFFACTOR_HPP

// Factorization over a simple number field Q(g) by Trager's norm descent:
// shift by multiples of the generator until the norm (a resultant with the
// minimal polynomial) is squarefree, factor the norm over Q, and pull the
// factors back with gcds.

#include <vector>

#include "entire/factor.hpp"
#include "entire/numfield.hpp"
#include "entire/resultant.hpp"

namespace entire {

struct KFactorization {
    AlgebraicNumber unit;
    std::vector<std::pair<KPoly, int>> factors;  // monic irreducible over the field
};

namespace detail_nf {

// g(x + shift*theta)
inline KPoly shift_by_generator(const KPoly& g, const FieldPtr& field, long shift) {
    AlgebraicNumber s = AlgebraicNumber(Rational(shift)) * AlgebraicNumber::generator(field);
    KPoly x_plus = KPoly(std::vector<AlgebraicNumber>{s, AlgebraicNumber(1)});
    KPoly acc;
    for (size_t i = g.c.size(); i-- > 0;) acc = acc * x_plus + KPoly::constant(g.c[i]);
    return acc;
}

// Norm of a K[x] polynomial down to Q[x]: Res_y(minpoly(y), g written with
// the generator replaced by y).
inline QPoly norm_to_q(const KPoly& g, const FieldPtr& field) {
    int dy = field->degree();
    // a(y): the minimal polynomial, constant in x.
    Poly<QPoly> a;
    {
        std::vector<QPoly> c(static_cast<size_t>(dy) + 1);
        for (int j = 0; j <= dy; ++j) c[static_cast<size_t>(j)] = QPoly::constant(field->minpoly().coeff(j));
        a = Poly<QPoly>(std::move(c));
    }
    // b(y) with coefficients polynomials in x.
    Poly<QPoly> b;
    {
        std::vector<QPoly> c(static_cast<size_t>(dy), QPoly());  // y-degree < dy
        for (int i = 0; i <= g.degree(); ++i) {
            const auto& coord = g.coeff(i).field() ? g.coeff(i).coords() : std::vector<Rational>{g.coeff(i).to_rational()};
            for (size_t j = 0; j < coord.size(); ++j) {
                if (coord[j] == 0) continue;
                // add coord[j] * x^i to c[j]
                QPoly term = QPoly::constant(coord[j]).shifted(i);
                c[j] = c[j] + term;
            }
        }
        b = Poly<QPoly>(std::move(c));
    }
    if (b.is_zero()) return QPoly();
    return resultant_bivariate(a, b);
}

}  // namespace detail_nf

// Complete factorization over Q(g); null field delegates to the rational
// routine.
inline KFactorization factor_numberfield(const KPoly& f, const FieldPtr& field) {
    if (f.is_zero()) throw std::domain_error("factor_numberfield: zero polynomial");
    if (!field) {
        std::vector<Rational> coeffs(f.c.size());
        for (size_t i = 0; i < f.c.size(); ++i) coeffs[i] = f.c[i].to_rational();
        auto fq = factor_rational(QPoly(std::move(coeffs)));
        KFactorization out;
        out.unit = AlgebraicNumber(fq.unit);
        for (auto& [fac, mult] : fq.factors) out.factors.emplace_back(embed_poly(nullptr, fac), mult);
        return out;
    }

    KFactorization out;
    out.unit = f.lead();
    if (f.degree() == 0) return out;
    KPoly g = make_monic(f);

    for (const auto& [sf, mult] : yun_squarefree(g)) {
        if (sf.degree() == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        bool done = false;
        for (long sh : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L}) {
            KPoly shifted = detail_nf::shift_by_generator(sf, field, sh);
            QPoly nrm = detail_nf::norm_to_q(shifted, field);
            if (nrm.is_zero()) continue;
            if (poly_gcd(nrm, nrm.derivative()).degree() != 0) continue;  // norm not squarefree
            auto nf = factor_rational(nrm);
            for (const auto& [qfac, qmult] : nf.factors) {
                (void)qmult;  // squarefree norm: multiplicity 1
                KPoly cand = poly_gcd(shifted, embed_poly(field, qfac));
                if (cand.degree() < 1) continue;
                // undo the shift: factor(x) = cand(x - sh*theta)
                KPoly fac = detail_nf::shift_by_generator(cand, field, -sh);
                out.factors.emplace_back(make_monic(fac), mult);
            }
            done = true;
            break;
        }
        if (!done) throw std::logic_error("factor_numberfield: no squarefree norm shift found");
    }
    return out;
}

struct KRoots {
    std::vector<std::pair<AlgebraicNumber, int>> roots;        // root, multiplicity
    std::vector<std::pair<KPoly, int>> irrational_factors;     // irreducible of degree >= 2
};

inline KRoots roots_in_field(const KPoly& f, const FieldPtr& field) {
    KRoots out;
    for (const auto& [fac, mult] : factor_numberfield(f, field).factors) {
        if (fac.degree() == 1)
            out.roots.emplace_back(-fac.coeff(0), mult);
        else
            out.irrational_factors.emplace_back(fac, mult);
    }
    return out;
}

}  // namespace entire

#endif
