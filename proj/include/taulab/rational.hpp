#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace taulab {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator); every constructor below canonicalizes.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline Scalar rat_from_strings(const std::string& num, const std::string& den) {
    Scalar q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw std::invalid_argument("rat: zero denominator");
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

inline Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

// (-1)^e for possibly negative e
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Scalar& q) { return q.get_str(); }

} // namespace taulab
