#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mdt {

// Exact coefficient arithmetic is GMP-backed throughout: weight-polynomial
// coefficients overflow 64 bits well below the default truncation orders.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r(int_pow(base.get_num(), static_cast<unsigned long>(e)),
              int_pow(base.get_den(), static_cast<unsigned long>(e)));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw std::domain_error("specialization pole");
    Rat r(int_pow(base.get_den(), static_cast<unsigned long>(-e)),
          int_pow(base.get_num(), static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

// Generalized binomial coefficient with arbitrary (possibly negative) top
// argument; always an integer, computed by the exact iterative quotient.
inline Int binomial(const Int& n, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - static_cast<long>(i - 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

// Moebius function by trial division; arguments stay below the truncation
// order, so nothing cleverer is warranted.
inline int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace mdt
