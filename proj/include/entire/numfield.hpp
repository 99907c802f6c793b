#ifndef ENTIRE_NUMFIELD_HPP
#define ENTIRE_NUMFIELD_HPP

// Simple number fields Q(g) with exact arithmetic. An AlgebraicNumber is a
// coordinate vector in the power basis 1, g, ..., g^{deg-1}; a null field
// pointer marks a plain rational constant, which embeds into any field on
// contact. Mixing two distinct proper fields is an error, never a coercion.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "entire/factor.hpp"
#include "entire/poly.hpp"
#include "entire/rational.hpp"

namespace entire {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
  public:
    // minpoly must be monic irreducible over Q of degree >= 2 (degree 1 would
    // just be Q itself, which the null field already covers).
    static FieldPtr create(const QPoly& minpoly, std::string generator_name = "g") {
        if (minpoly.degree() < 2) throw std::invalid_argument("NumberField: degree must be >= 2");
        if (!(minpoly.lead() == Rational(1))) throw std::invalid_argument("NumberField: minimal polynomial must be monic");
        if (!is_irreducible_q(minpoly)) throw std::invalid_argument("NumberField: minimal polynomial is reducible over Q");
        return FieldPtr(new NumberField(minpoly, std::move(generator_name)));
    }

    const QPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const std::string& generator_name() const { return gen_name_; }

    bool same_as(const NumberField& o) const { return this == &o || minpoly_ == o.minpoly_; }

  private:
    NumberField(QPoly mp, std::string gn) : minpoly_(std::move(mp)), gen_name_(std::move(gn)) {}
    QPoly minpoly_;
    std::string gen_name_;
};

class AlgebraicNumber {
  public:
    AlgebraicNumber() : coords_{Rational(0)} {}
    AlgebraicNumber(int v) : coords_{Rational(v)} {}  // NOLINT: implicit by design
    AlgebraicNumber(Rational v) : coords_{std::move(v)} {}  // NOLINT
    AlgebraicNumber(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
        if (!field_) throw std::invalid_argument("AlgebraicNumber: null field with coordinate vector");
        coords_.resize(static_cast<size_t>(field_->degree()), Rational(0));
    }

    static AlgebraicNumber generator(const FieldPtr& field) {
        std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
        c[1] = 1;
        return AlgebraicNumber(field, std::move(c));
    }

    static AlgebraicNumber in_field(const FieldPtr& field, const Rational& v) {
        std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
        c[0] = v;
        return AlgebraicNumber(field, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("AlgebraicNumber: not rational");
        return coords_[0];
    }

    AlgebraicNumber operator-() const {
        AlgebraicNumber r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y, f] = aligned(a, b);
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return assemble(f, std::move(x));
    }

    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y, f] = aligned(a, b);
        for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
        return assemble(f, std::move(x));
    }

    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y, f] = aligned(a, b);
        if (!f) return AlgebraicNumber(x[0] * y[0]);
        size_t n = x.size();
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) prod[i + j] += x[i] * y[j];
        }
        return assemble(f, reduce(f, std::move(prod)));
    }

    AlgebraicNumber inverse() const {
        if (is_zero()) throw std::domain_error("AlgebraicNumber: division by zero");
        if (!field_) return AlgebraicNumber(Rational(1) / coords_[0]);
        QPoly a{std::vector<Rational>(coords_)};
        auto [g, s, t] = poly_ext_gcd(a, field_->minpoly());
        (void)t;
        if (g.degree() != 0) throw std::logic_error("AlgebraicNumber: minimal polynomial not irreducible?");
        // s*a = 1 (mod minpoly) after scaling by the constant g.
        QPoly inv = s % field_->minpoly();
        std::vector<Rational> c(inv.c);
        c.resize(static_cast<size_t>(field_->degree()), Rational(0));
        return AlgebraicNumber(field_, std::move(c));
    }

    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).is_zero(); }
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

    // Deterministic total order (by coordinates); used for map keys and for
    // canonical output, it has no arithmetic meaning.
    friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        AlgebraicNumber d = a - b;
        for (size_t i = d.coords_.size(); i-- > 0;) {
            if (d.coords_[i] < 0) return true;
            if (d.coords_[i] > 0) return false;
        }
        return false;
    }

    AlgebraicNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        AlgebraicNumber r(1), b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1ul) r = r * b;
            b = b * b;
            k >>= 1ul;
        }
        return r;
    }

    std::string str() const {
        if (!field_ || is_rational()) return to_string(coords_[0]);
        std::string out;
        const std::string& g = field_->generator_name();
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            std::string term;
            if (i == 0) {
                term = to_string(coords_[i]);
            } else {
                std::string pw = (i == 1) ? g : g + "^" + std::to_string(i);
                if (coords_[i] == 1)
                    term = pw;
                else if (coords_[i] == -1)
                    term = "-" + pw;
                else
                    term = to_string(coords_[i]) + "*" + pw;
            }
            if (out.empty())
                out = term;
            else if (!term.empty() && term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

  private:
    static std::vector<Rational> reduce(const FieldPtr& f, std::vector<Rational> prod) {
        const QPoly& m = f->minpoly();
        int n = m.degree();
        for (int i = static_cast<int>(prod.size()) - 1; i >= n; --i) {
            Rational c = prod[static_cast<size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<size_t>(i)] = 0;
            for (int j = 0; j < n; ++j) prod[static_cast<size_t>(i - n + j)] -= c * m.coeff(j);
        }
        prod.resize(static_cast<size_t>(n));
        return prod;
    }

    static AlgebraicNumber assemble(const FieldPtr& f, std::vector<Rational> c) {
        if (!f) {
            AlgebraicNumber r;
            r.coords_ = std::move(c);
            r.coords_.resize(1);
            return r;
        }
        return AlgebraicNumber(f, std::move(c));
    }

    // Returns coordinate vectors in a common field (null = Q).
    static std::tuple<std::vector<Rational>, std::vector<Rational>, FieldPtr> aligned(const AlgebraicNumber& a,
                                                                                      const AlgebraicNumber& b) {
        if (a.field_ && b.field_) {
            if (!a.field_->same_as(*b.field_)) throw std::invalid_argument("AlgebraicNumber: mixed-field operands");
            return {a.coords_, b.coords_, a.field_};
        }
        if (!a.field_ && !b.field_) return {a.coords_, b.coords_, nullptr};
        const AlgebraicNumber& fielded = a.field_ ? a : b;
        const AlgebraicNumber& plain = a.field_ ? b : a;
        std::vector<Rational> lifted(static_cast<size_t>(fielded.field_->degree()), Rational(0));
        lifted[0] = plain.coords_[0];
        if (a.field_) return {a.coords_, std::move(lifted), a.field_};
        return {std::move(lifted), b.coords_, b.field_};
    }

    FieldPtr field_;                 // null: plain rational
    std::vector<Rational> coords_;   // size degree (or 1 when null field)
};

using KPoly = Poly<AlgebraicNumber>;

inline AlgebraicNumber embed(const FieldPtr& field, const AlgebraicNumber& v) {
    if (!field) return v;
    if (!v.field()) return AlgebraicNumber::in_field(field, v.coords()[0]);
    if (!v.field()->same_as(*field)) throw std::invalid_argument("embed: value from a different field");
    return v;
}

inline KPoly embed_poly(const FieldPtr& field, const QPoly& f) {
    std::vector<AlgebraicNumber> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = field ? AlgebraicNumber::in_field(field, f.c[i]) : AlgebraicNumber(f.c[i]);
    return KPoly(std::move(c));
}

// Writes an element of Q(g) as the polynomial in a fresh variable y standing
// for the generator (used by the norm/resultant descent).
inline QPoly coords_as_poly(const AlgebraicNumber& a) {
    return QPoly(std::vector<Rational>(a.coords()));
}

}  // namespace entire

#endif
