#ifndef ENTIRE_RESULTANT_HPP
#define ENTIRE_RESULTANT_HPP

// Sylvester resultants over an exact field, plus the bivariate case via
// evaluation/interpolation. The sign convention is the plain Sylvester
// determinant with deg(g) rows of f above deg(f) rows of g, coefficients in
// descending order; e.g. Res_x(x^2 - t, x) = -t.

#include <stdexcept>
#include <vector>

#include "entire/poly.hpp"

namespace entire {

// Determinant of the Sylvester matrix of a (degree m) and b (degree n) given
// by padded coefficient vectors (sizes m+1 and n+1; the nominal degrees are
// taken from the vector sizes, so vanishing leads behave like evaluating a
// symbolic determinant).
template <typename K>
K sylvester_det(const std::vector<K>& a, const std::vector<K>& b) {
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester_det: empty coefficient vector");
    int dim = m + n;
    if (dim == 0) return K(1);
    std::vector<std::vector<K>> s(static_cast<size_t>(dim), std::vector<K>(static_cast<size_t>(dim), K(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b[static_cast<size_t>(n - j)];
    // Gaussian elimination with exact division-free sign tracking.
    K det(1);
    for (int col = 0; col < dim; ++col) {
        int sel = -1;
        for (int row = col; row < dim; ++row)
            if (!(s[static_cast<size_t>(row)][static_cast<size_t>(col)] == K(0))) {
                sel = row;
                break;
            }
        if (sel < 0) return K(0);
        if (sel != col) {
            std::swap(s[static_cast<size_t>(sel)], s[static_cast<size_t>(col)]);
            det = -det;
        }
        K pivot = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det = det * pivot;
        K inv = K(1) / pivot;
        for (int row = col + 1; row < dim; ++row) {
            K f = s[static_cast<size_t>(row)][static_cast<size_t>(col)] * inv;
            if (f == K(0)) continue;
            for (int j = col; j < dim; ++j)
                s[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                    s[static_cast<size_t>(row)][static_cast<size_t>(j)] - f * s[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return det;
}

// Resultant of univariate polynomials over a field.
template <typename K>
K resultant_univariate(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    return sylvester_det(a.c, b.c);
}

// Lagrange interpolation through (points[i], values[i]).
template <typename K>
Poly<K> lagrange_interpolate(const std::vector<K>& points, const std::vector<K>& values) {
    size_t n = points.size();
    Poly<K> acc;
    for (size_t i = 0; i < n; ++i) {
        Poly<K> basis = Poly<K>::constant(K(1));
        K denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * Poly<K>(std::vector<K>{-points[j], K(1)});
            denom = denom * (points[i] - points[j]);
        }
        acc = acc + basis.scaled(values[i] / denom);
    }
    return acc;
}

// Resultant eliminating the outer variable of two bivariate polynomials
// (outer coefficients are polynomials in the inner variable). Entries of the
// symbolic Sylvester matrix are inner polynomials; the determinant is
// recovered by evaluation and interpolation. K must have characteristic 0.
template <typename K>
Poly<K> resultant_bivariate(const Poly<Poly<K>>& a, const Poly<Poly<K>>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    int m = a.degree(), n = b.degree();
    auto max_inner = [](const Poly<Poly<K>>& f) {
        int d = 0;
        for (const auto& ci : f.c) d = std::max(d, ci.degree());
        return d;
    };
    int bound = n * max_inner(a) + m * max_inner(b);
    std::vector<K> points, values;
    points.reserve(static_cast<size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) {
        K c(k);
        std::vector<K> av(static_cast<size_t>(m) + 1), bv(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= m; ++i) av[static_cast<size_t>(i)] = a.coeff(i).eval(c);
        for (int i = 0; i <= n; ++i) bv[static_cast<size_t>(i)] = b.coeff(i).eval(c);
        points.push_back(c);
        values.push_back(sylvester_det(av, bv));
    }
    return lagrange_interpolate(points, values);
}

}  // namespace entire

#endif
