#ifndef ENTIRE_FACTOR_HPP
#define ENTIRE_FACTOR_HPP

// Exact factorization of univariate polynomials over the rationals:
// squarefree split, Berlekamp over a small prime, quadratic Hensel lifting,
// subset recombination. Degrees here are small, so no effort is spent on
// asymptotics.

#include <map>
#include <stdexcept>
#include <vector>

#include "entire/poly.hpp"
#include "entire/rational.hpp"

namespace entire {

struct QFactorization {
    Rational unit;                               // f = unit * prod(factors[i].first^second)
    std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, multiplicity
};

namespace detail_fq {

using MpPoly = std::vector<long long>;  // coeff of x^i, values in [0,p)

inline void mp_normalize(MpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mp_deg(const MpPoly& a) { return static_cast<int>(a.size()) - 1; }

inline MpPoly mp_sub(const MpPoly& a, const MpPoly& b, long long p) {
    MpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    mp_normalize(r);
    return r;
}

inline MpPoly mp_mul(const MpPoly& a, const MpPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    MpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mp_normalize(r);
    return r;
}

inline long long mod_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

inline std::pair<MpPoly, MpPoly> mp_divrem(const MpPoly& a, const MpPoly& b, long long p) {
    if (b.empty()) throw std::domain_error("mp_divrem: by zero");
    MpPoly q, r = a;
    mp_normalize(r);
    if (mp_deg(r) < mp_deg(b)) return {q, r};
    q.assign(r.size() - b.size() + 1, 0);
    long long inv = mod_inverse(b.back(), p);
    while (!r.empty() && mp_deg(r) >= mp_deg(b)) {
        int k = mp_deg(r) - mp_deg(b);
        long long f = r.back() * inv % p;
        q[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            size_t idx = i + static_cast<size_t>(k);
            r[idx] = ((r[idx] - f * b[i]) % p + p) % p;
        }
        mp_normalize(r);
    }
    return {q, r};
}

inline MpPoly mp_monic(const MpPoly& a, long long p) {
    if (a.empty()) return a;
    long long inv = mod_inverse(a.back(), p);
    MpPoly r = a;
    for (auto& v : r) v = v * inv % p;
    return r;
}

inline MpPoly mp_gcd(MpPoly a, MpPoly b, long long p) {
    while (!b.empty()) {
        auto r = mp_divrem(a, b, p).second;
        a = b;
        b = r;
    }
    return mp_monic(a, p);
}

inline MpPoly mp_derivative(const MpPoly& a, long long p) {
    if (a.size() <= 1) return {};
    MpPoly r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * static_cast<long long>(i % static_cast<size_t>(p))) % p;
    mp_normalize(r);
    return r;
}

// Extended gcd mod p: returns (g, s, t) with s*a + t*b = g (g monic).
inline std::tuple<MpPoly, MpPoly, MpPoly> mp_ext_gcd(const MpPoly& a, const MpPoly& b, long long p) {
    MpPoly r0 = a, r1 = b;
    MpPoly s0{1}, s1{};
    MpPoly t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divrem(r0, r1, p);
        r0 = r1;
        r1 = r;
        MpPoly s = mp_sub(s0, mp_mul(q, s1, p), p);
        s0 = s1;
        s1 = s;
        MpPoly t = mp_sub(t0, mp_mul(q, t1, p), p);
        t0 = t1;
        t1 = t;
    }
    if (r0.empty()) return {r0, s0, t0};
    long long inv = mod_inverse(r0.back(), p);
    auto scale = [&](MpPoly v) {
        for (auto& x : v) x = x * inv % p;
        return v;
    };
    return {scale(r0), scale(s0), scale(t0)};
}

inline MpPoly mp_powmod(const MpPoly& base, Int e, const MpPoly& mod, long long p) {
    MpPoly r{1};
    MpPoly b = mp_divrem(base, mod, p).second;
    while (e > 0) {
        if ((e & 1) == 1) r = mp_divrem(mp_mul(r, b, p), mod, p).second;
        b = mp_divrem(mp_mul(b, b, p), mod, p).second;
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a squarefree monic polynomial mod p.
inline std::vector<MpPoly> berlekamp(const MpPoly& g, long long p) {
    int n = mp_deg(g);
    if (n <= 1) return {g};
    MpPoly xp = mp_powmod(MpPoly{0, 1}, Int(p), g, p);
    std::vector<MpPoly> rows(static_cast<size_t>(n));
    rows[0] = MpPoly{1};
    for (int i = 1; i < n; ++i)
        rows[static_cast<size_t>(i)] = mp_divrem(mp_mul(rows[static_cast<size_t>(i - 1)], xp, p), g, p).second;
    // Solve v^p = v (mod g): v in the nullspace of (M - I)^T where row i of M
    // is x^{ip} mod g.
    std::vector<std::vector<long long>> m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const MpPoly& row = rows[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            long long v = (j < static_cast<int>(row.size())) ? row[static_cast<size_t>(j)] : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        long long inv = mod_inverse(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] = m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            long long f = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                    ((m[static_cast<size_t>(row)][static_cast<size_t>(j)] - f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<MpPoly> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        MpPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int i = 0; i < rank; ++i) {
            long long val = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (val != 0) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = (p - val) % p;
        }
        mp_normalize(v);
        basis.push_back(v);
    }
    size_t r = basis.size();
    std::vector<MpPoly> factors{mp_monic(g, p)};
    if (r <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() >= r) break;
        if (mp_deg(v) < 1) continue;
        for (size_t fi = 0; fi < factors.size() && factors.size() < r; ++fi) {
            if (mp_deg(factors[fi]) <= 1) continue;
            for (long long s = 0; s < p && factors.size() < r; ++s) {
                MpPoly shifted = v;
                shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
                shifted[0] = ((shifted[0] - s) % p + p) % p;
                mp_normalize(shifted);
                MpPoly h = mp_gcd(factors[fi], shifted, p);
                if (mp_deg(h) > 0 && mp_deg(h) < mp_deg(factors[fi])) {
                    MpPoly rest = mp_divrem(factors[fi], h, p).first;
                    factors[fi] = h;
                    factors.push_back(mp_monic(rest, p));
                }
            }
        }
    }
    return factors;
}

// ---- integer polynomials for the lifting stage ----

using ZPoly = std::vector<Int>;

inline void z_normalize(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_normalize(r);
    return r;
}

inline ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    z_normalize(r);
    return r;
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    z_normalize(r);
    return r;
}

inline ZPoly z_mod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& v : r) {
        v %= m;
        if (v < 0) v += m;
    }
    z_normalize(r);
    return r;
}

inline ZPoly z_mod_symmetric(const ZPoly& a, const Int& m) {
    ZPoly r = z_mod(a, m);
    for (auto& v : r)
        if (2 * v > m) v -= m;
    z_normalize(r);
    return r;
}

inline ZPoly z_mulmod(const ZPoly& a, const ZPoly& b, const Int& m) { return z_mod(z_mul(a, b), m); }
inline ZPoly z_addmod(const ZPoly& a, const ZPoly& b, const Int& m) { return z_mod(z_add(a, b), m); }
inline ZPoly z_submod(const ZPoly& a, const ZPoly& b, const Int& m) { return z_mod(z_sub(a, b), m); }

inline std::pair<ZPoly, ZPoly> z_divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (b.empty() || b.back() != 1) throw std::domain_error("z_divrem_monic_mod: divisor not monic");
    ZPoly q, r = z_mod(a, m);
    if (z_deg(r) < z_deg(b)) return {q, r};
    q.assign(r.size() - b.size() + 1, Int(0));
    while (!r.empty() && z_deg(r) >= z_deg(b)) {
        int k = z_deg(r) - z_deg(b);
        Int f = r.back();
        q[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            size_t idx = i + static_cast<size_t>(k);
            r[idx] = (r[idx] - f * b[i]) % m;
            if (r[idx] < 0) r[idx] += m;
        }
        z_normalize(r);
    }
    return {q, r};
}

inline bool z_divides(const ZPoly& d, const ZPoly& a, ZPoly& quotient) {
    if (d.empty()) return false;
    if (a.empty()) {
        quotient.clear();
        return true;
    }
    ZPoly q, r = a;
    if (z_deg(a) < z_deg(d)) return false;
    q.assign(a.size() - d.size() + 1, Int(0));
    while (!r.empty() && z_deg(r) >= z_deg(d)) {
        if (r.back() % d.back() != 0) return false;
        int k = z_deg(r) - z_deg(d);
        Int f = r.back() / d.back();
        q[static_cast<size_t>(k)] = f;
        for (size_t i = 0; i < d.size(); ++i) r[i + static_cast<size_t>(k)] -= f * d[i];
        z_normalize(r);
    }
    if (!r.empty()) return false;
    z_normalize(q);
    quotient = q;
    return true;
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
// given f = g*h (mod m), s*g + t*h = 1 (mod m), g and h monic, lifts to m^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_submod(f, z_mul(in.g, in.h), m2);
    auto [q, r] = z_divrem_monic_mod(z_mulmod(in.s, e, m2), in.h, m2);
    ZPoly g_new = z_addmod(z_addmod(in.g, z_mulmod(in.t, e, m2), m2), z_mulmod(q, in.g, m2), m2);
    ZPoly h_new = z_addmod(in.h, r, m2);
    ZPoly b = z_submod(z_addmod(z_mulmod(in.s, g_new, m2), z_mulmod(in.t, h_new, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = z_divrem_monic_mod(z_mulmod(in.s, b, m2), h_new, m2);
    ZPoly s_new = z_submod(in.s, d, m2);
    ZPoly t_new = z_submod(in.t, z_addmod(z_mulmod(in.t, b, m2), z_mulmod(c, g_new, m2), m2), m2);
    return {g_new, h_new, s_new, t_new};
}

// Lifts a coprime monic factorization of monic f from mod p to mod p^k (k =
// 2^j >= target), recursing on a binary split of the factor list.
inline void hensel_lift_tree(const ZPoly& f, const std::vector<MpPoly>& modular, size_t lo, size_t hi,
                             long long p, const Int& target_modulus, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(z_mod(f, target_modulus));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    MpPoly g0{1}, h0{1};
    for (size_t i = lo; i < mid; ++i) g0 = mp_mul(g0, modular[i], p);
    for (size_t i = mid; i < hi; ++i) h0 = mp_mul(h0, modular[i], p);
    auto [one, s0, t0] = mp_ext_gcd(g0, h0, p);
    if (mp_deg(one) != 0) throw std::logic_error("hensel_lift_tree: factors not coprime");
    auto to_z = [](const MpPoly& a) {
        ZPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
        return r;
    };
    HenselPair cur{to_z(g0), to_z(h0), to_z(s0), to_z(t0)};
    Int m(p);
    while (m < target_modulus) {
        cur = hensel_step(z_mod(f, m * m), cur, m);
        m *= m;
    }
    hensel_lift_tree(z_mod(cur.g, target_modulus), modular, lo, mid, p, target_modulus, out);
    hensel_lift_tree(z_mod(cur.h, target_modulus), modular, mid, hi, p, target_modulus, out);
}

inline Int z_max_abs(const ZPoly& a) {
    Int m = 0;
    for (const auto& v : a) m = std::max(m, int_abs(v));
    return m;
}

// Factors a squarefree monic integer polynomial into monic irreducible
// integer polynomials.
inline std::vector<ZPoly> factor_squarefree_monic_z(const ZPoly& f) {
    int n = z_deg(f);
    if (n <= 1) return {f};
    static const long long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                       47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    long long best_p = 0;
    std::vector<MpPoly> best_factors;
    int tried = 0;
    for (long long p : primes) {
        MpPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Int r = f[i] % p;
            if (r < 0) r += p;
            fp[i] = r.convert_to<long long>();
        }
        mp_normalize(fp);
        if (mp_deg(fp) != n) continue;  // p divides the leading coefficient (monic: impossible)
        MpPoly d = mp_derivative(fp, p);
        if (mp_deg(mp_gcd(fp, d, p)) != 0) continue;  // not squarefree mod p
        auto factors = berlekamp(mp_monic(fp, p), p);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = factors;
        }
        if (++tried >= 3 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("factor_squarefree_monic_z: no usable prime found");
    if (best_factors.size() == 1) return {f};

    // Landau-Mignotte style bound on factor coefficients, doubled for the
    // symmetric representation.
    Int bound = (Int(1) << static_cast<unsigned>(n)) * z_max_abs(f) * (int_isqrt(Int(n) + 1) + 1);
    Int target(best_p);
    while (target <= 2 * bound) target *= best_p;

    std::vector<ZPoly> lifted;
    hensel_lift_tree(z_mod(f, target), best_factors, 0, best_factors.size(), best_p, target, lifted);

    // Subset recombination.
    std::vector<ZPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    ZPoly remaining = f;
    size_t take = 1;
    while (2 * take <= live.size()) {
        bool found = false;
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Int(1)};
            for (size_t i : idx) cand = z_mulmod(cand, lifted[live[i]], target);
            cand = z_mod_symmetric(cand, target);
            ZPoly quotient;
            if (z_divides(cand, remaining, quotient)) {
                result.push_back(cand);
                remaining = quotient;
                std::vector<size_t> nl;
                for (size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    nl.push_back(live[i]);
                }
                live = nl;
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == live.size() - take + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++take;
    }
    if (z_deg(remaining) > 0) result.push_back(remaining);
    return result;
}

}  // namespace detail_fq

// Complete factorization over Q. Factors are monic irreducible; the unit is
// the leading coefficient of f.
inline QFactorization factor_rational(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_rational: zero polynomial");
    QFactorization out;
    out.unit = f.lead();
    if (f.degree() == 0) return out;
    QPoly g = make_monic(f);

    for (const auto& [sf, mult] : yun_squarefree(g)) {
        // Transform to a monic integer polynomial: for monic rational sf with
        // denominators, substitute x -> x/c and scale.
        // First clear denominators: sf_int = primitive integer version.
        QPoly prim = primitive_part(sf);
        Int lead = num(prim.lead());
        // monic transform: F*(x) = lead^{n-1} * prim(x/lead)
        int n = prim.degree();
        detail_fq::ZPoly fstar(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            Rational ci = prim.coeff(i);
            // prim has integer coefficients
            fstar[static_cast<size_t>(i)] = num(ci) * int_pow(lead, static_cast<unsigned>(n - 1 - i >= 0 ? n - 1 - i : 0));
            if (i == n) fstar[static_cast<size_t>(i)] = 1;
        }
        auto monic_factors = detail_fq::factor_squarefree_monic_z(fstar);
        for (const auto& mf : monic_factors) {
            // Undo transform: factor(x) = mf(lead * x), then monicize over Q.
            std::vector<Rational> coeffs(mf.size());
            for (size_t i = 0; i < mf.size(); ++i) coeffs[i] = Rational(mf[i] * int_pow(lead, static_cast<unsigned>(i)));
            QPoly q(std::move(coeffs));
            out.factors.emplace_back(make_monic(q), mult);
        }
    }
    return out;
}

inline bool is_irreducible_q(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_rational(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// Rational roots of f, with multiplicities.
inline std::vector<std::pair<Rational, int>> rational_roots(const QPoly& f) {
    std::vector<std::pair<Rational, int>> roots;
    for (const auto& [fac, mult] : factor_rational(f).factors)
        if (fac.degree() == 1) roots.emplace_back(-fac.coeff(0), mult);
    return roots;
}

}  // namespace entire

#endif
