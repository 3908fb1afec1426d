#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace bkk {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides out the gcd; sign of the first nonzero entry becomes positive
// when `canonical_sign` is set.
inline IVec primitive(IVec v, bool canonical_sign = false) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    if (canonical_sign) {
        for (const Int& x : v) {
            if (x != 0) {
                if (x < 0)
                    for (Int& y : v) y = -y;
                break;
            }
        }
    }
    return v;
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec neg(IVec a) {
    for (Int& x : a) x = -x;
    return a;
}

inline QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Clears denominators; result is the primitive integer vector parallel to v
// (zero vector maps to zero).
inline IVec primitive_direction(const QVec& v) {
    Int lcm = 1;
    for (const Rat& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * Rat(lcm);
        r[i] = t.get_num();
    }
    return primitive(std::move(r));
}

inline bool is_integral(const QVec& v) {
    for (const Rat& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

inline IVec to_integer(const QVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace bkk
