#ifndef ENTIRE_RATIONAL_HPP
#define ENTIRE_RATIONAL_HPP

// Exact integer/rational arithmetic used everywhere else in the library.
// Thin layer over boost::multiprecision; everything is a value type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace entire {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int int_pow(const Int& base, unsigned e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: zero to negative power");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1ul) r *= b;
        b *= b;
        k >>= 1ul;
    }
    return r;
}

// Floor of the integer square root.
inline Int int_isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("int_isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

// Exact square root when n is a perfect square.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = int_isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto rn = int_sqrt_exact(num(q));
    if (!rn) return std::nullopt;
    auto rd = int_sqrt_exact(den(q));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    }
}

// Deterministic seedable generator for the randomized suites. Reports must be
// byte-identical across platforms, so no <random> distributions are used.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
        for (int i = 0; i < 4; ++i) next();
    }

    std::uint64_t next() {
        // splitmix64 step
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational small_rational(long long max_abs_num, long long max_den) {
        Int n(range(-max_abs_num, max_abs_num));
        Int d(range(1, max_den));
        return Rational(n, d);
    }

  private:
    std::uint64_t state_;
};

}  // namespace entire

#endif
