#ifndef ENTIRE_POLY_HPP
#define ENTIRE_POLY_HPP

// Dense univariate polynomials over an exact coefficient type.
// The coefficient type must be a field for divrem/gcd; add/mul/eval work over
// any exact ring with T(int) construction.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "entire/rational.hpp"

namespace entire {

template <typename T>
bool coeff_is_zero(const T& v) {
    return v == T(0);
}

template <typename T>
struct Poly {
    // c[i] is the coefficient of v^i; invariant: no trailing zero, empty == 0.
    std::vector<T> c;

    Poly() = default;
    explicit Poly(int v) {
        if (v != 0) c.push_back(T(v));
    }
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

    void normalize() {
        while (!c.empty() && coeff_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    const T& lead() const {
        if (is_zero()) throw std::domain_error("Poly::lead on zero polynomial");
        return c.back();
    }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return T(0);
        return c[static_cast<size_t>(i)];
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c.size(), o.c.size()), T(0));
        for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] = r[i] + o.c[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c.size() + o.c.size() - 1, T(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
        return Poly(std::move(r));
    }

    Poly scaled(const T& s) const {
        Poly r = *this;
        for (auto& v : r.c) v = v * s;
        r.normalize();
        return r;
    }

    // Multiply by v^k.
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        std::vector<T> r(c.size() + static_cast<size_t>(k), T(0));
        for (size_t i = 0; i < c.size(); ++i) r[i + static_cast<size_t>(k)] = c[i];
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<T> r(c.size() - 1, T(0));
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * T(static_cast<int>(i));
        return Poly(std::move(r));
    }

    T eval(const T& v) const {
        T acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
        return acc;
    }

    // Evaluation into any ring U that supports U*U, U+U and construction from T.
    template <typename U>
    U eval_in(const U& v, const U& zero) const {
        U acc = zero;
        for (size_t i = c.size(); i-- > 0;) acc = acc * v + U(c[i]);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(T(1));
        Poly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }
};

// Quotient/remainder over a field.
template <typename T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("poly divrem: division by zero");
    Poly<T> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, T(0));
    T inv_lead = T(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        T f = r.lead() * inv_lead;
        q.c[static_cast<size_t>(k)] = f;
        r = r - b.scaled(f).shifted(k);
    }
    q.normalize();
    return {q, r};
}

// Quotient/remainder by a monic divisor; works when T is only a ring.
template <typename T>
std::pair<Poly<T>, Poly<T>> divrem_monic(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero() || !(b.lead() == T(1))) throw std::domain_error("divrem_monic: divisor not monic");
    Poly<T> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, T(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        T f = r.lead();
        q.c[static_cast<size_t>(k)] = f;
        r = r - b.scaled(f).shifted(k);
    }
    q.normalize();
    return {q, r};
}

template <typename T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divrem(a, b).first;
}

template <typename T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divrem(a, b).second;
}

// Exact division; throws if the remainder is nonzero.
template <typename T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: inexact division");
    return q;
}

template <typename T>
Poly<T> make_monic(const Poly<T>& a) {
    if (a.is_zero()) return a;
    return a.scaled(T(1) / a.lead());
}

// Monic gcd over a field.
template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = b;
        b = r;
    }
    return make_monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <typename T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_ext_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(T(1)), s1;
    Poly<T> t0, t1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        auto s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        auto t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Squarefree part over a field of characteristic zero.
template <typename T>
Poly<T> squarefree_part(const Poly<T>& f) {
    if (f.degree() <= 0) return f;
    auto g = poly_gcd(f, f.derivative());
    return exact_div(f, g);
}

// Yun squarefree decomposition of a monic polynomial in characteristic zero:
// returns (s_i, i) with f = prod s_i^i, each s_i squarefree, deg s_i > 0.
template <typename T>
std::vector<std::pair<Poly<T>, int>> yun_squarefree(const Poly<T>& f) {
    std::vector<std::pair<Poly<T>, int>> out;
    if (f.degree() < 1) return out;
    Poly<T> d = f.derivative();
    Poly<T> a = poly_gcd(f, d);
    Poly<T> b = exact_div(f, a);
    Poly<T> c = exact_div(d, a);
    int i = 1;
    while (b.degree() > 0) {
        Poly<T> d2 = c - b.derivative();
        Poly<T> s = poly_gcd(b, d2);
        if (s.degree() > 0) out.emplace_back(s, i);
        b = exact_div(b, s);
        c = exact_div(d2, s);
        ++i;
    }
    return out;
}

using QPoly = Poly<Rational>;

// Content (gcd of numerators over lcm of denominators) and primitive part.
inline Rational content(const QPoly& f) {
    if (f.is_zero()) return Rational(0);
    Int g = 0, l = 1;
    for (const auto& q : f.c) {
        g = int_gcd(g, num(q));
        l = int_lcm(l, den(q));
    }
    return Rational(g, l);
}

inline QPoly primitive_part(const QPoly& f) {
    if (f.is_zero()) return f;
    Rational c = content(f);
    if (f.lead() < 0) c = -c;
    return f.scaled(Rational(1) / c);
}

template <typename T>
std::string poly_to_string(const Poly<T>& f, const std::string& var,
                           const std::function<std::string(const T&)>& coeff_str) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        T ci = f.coeff(i);
        if (coeff_is_zero(ci)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = coeff_str(ci);
        if (i == 0) {
            out += cs;
        } else {
            std::string pw = (i == 1) ? var : var + "^" + std::to_string(i);
            out += (cs == "1") ? pw : cs + "*" + pw;
        }
    }
    return out;
}

}  // namespace entire

#endif
