#pragma once

#include <optional>
#include <string>

#include "mdt/laurent.hpp"

namespace mdt {

class TruncLaurent;

// Normalized fraction of motivic weights: the concrete form of classes in
// M_C[(1-L^n)^{-1}], e.g. the renormalized commuting-variety classes.
//
// Normal form: write the fraction as u^e * (p/q) * (n(u)/d(u)) with n, d
// primitive integer polynomials with nonzero constant term, coprime over Q,
// d with positive leading coefficient, and p/q a reduced positive rational.
// Then num = sign * p * u^e * n(u) and den = q * d(u).  This form is unique,
// so equality of normal forms coincides with cross-multiplication equality,
// and pure u-power content always sits in the numerator.
class RatWeight {
public:
    RatWeight() : num_(), den_(MotWeight::one()) {}
    explicit RatWeight(MotWeight n) : num_(std::move(n)), den_(MotWeight::one()) {}
    RatWeight(MotWeight n, MotWeight d);
    explicit RatWeight(const Int& n) : RatWeight(MotWeight::constant(n)) {}
    explicit RatWeight(const Rat& r);

    static RatWeight one() { return RatWeight(MotWeight::one()); }
    static RatWeight constant(const Int& n) { return RatWeight(n); }

    const MotWeight& num() const { return num_; }
    const MotWeight& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MotWeight::one(); }

    // The polynomial part when den == 1; throws otherwise with the supplied
    // context message.
    MotWeight to_polynomial(const char* error_message = "weight is not polynomial") const;

    RatWeight& operator+=(const RatWeight& o);
    RatWeight& operator-=(const RatWeight& o);
    RatWeight& operator*=(const RatWeight& o);
    RatWeight& operator/=(const RatWeight& o);
    friend RatWeight operator+(RatWeight a, const RatWeight& b) { return a += b; }
    friend RatWeight operator-(RatWeight a, const RatWeight& b) { return a -= b; }
    friend RatWeight operator*(RatWeight a, const RatWeight& b) { return a *= b; }
    friend RatWeight operator/(RatWeight a, const RatWeight& b) { return a /= b; }
    RatWeight operator-() const;

    friend bool operator==(const RatWeight& a, const RatWeight& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatWeight& a, const RatWeight& b) { return !(a == b); }

    std::optional<RatWeight> try_inverse() const;

private:
    void normalize();

    MotWeight num_;
    MotWeight den_;
};

inline RatWeight rf_reduce(MotWeight num, MotWeight den) {
    return RatWeight(std::move(num), std::move(den));
}

// Adams operation u -> u^k on polynomial and fractional weights; a ring
// homomorphism with adams(k, adams(l, .)) = adams(k*l, .).
inline MotWeight adams(long k, const MotWeight& w) { return w.substitute_power(k); }
RatWeight adams(long k, const RatWeight& w);

// Exact value at u = u_value; poles are reported, never regularized.
Rat evaluate(const RatWeight& w, const Rat& u_value);

std::string to_string(const RatWeight& w);

}  // namespace mdt
