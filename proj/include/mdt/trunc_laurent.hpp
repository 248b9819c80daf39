#pragma once

#include <map>
#include <optional>
#include <string>

#include "mdt/ints.hpp"
#include "mdt/rat_weight.hpp"

namespace mdt {

// Laurent expansion at L = infinity, truncated below: terms are exact at
// every exponent >= floor() and dropped below it.  Exponents count
// half-powers of L (u-units), matching MotWeight.  A disengaged floor means
// the value is an exact Laurent polynomial.
class TruncLaurent {
public:
    using TermMap = std::map<long, Rat>;

    TruncLaurent() = default;
    static TruncLaurent exact(TermMap terms);
    static TruncLaurent constant(const Int& c) { return exact({{0, Rat(c)}}); }
    static TruncLaurent one() { return constant(1); }
    static TruncLaurent monomial(long e, Rat c) { return exact({{e, std::move(c)}}); }

    const TermMap& terms() const { return terms_; }
    std::optional<long> floor() const { return floor_; }
    bool is_exact() const { return !floor_.has_value(); }
    bool is_zero() const { return terms_.empty() && is_exact(); }
    Rat coeff(long e) const;

    // Drop all terms below the given exponent and mark the result truncated.
    TruncLaurent truncated_below(long floor) const;

    TruncLaurent& operator+=(const TruncLaurent& o);
    TruncLaurent& operator-=(const TruncLaurent& o);
    friend TruncLaurent operator+(TruncLaurent a, const TruncLaurent& b) { return a += b; }
    friend TruncLaurent operator-(TruncLaurent a, const TruncLaurent& b) { return a -= b; }
    friend TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b);
    TruncLaurent operator-() const;

    friend bool operator==(const TruncLaurent& a, const TruncLaurent& b) {
        return a.floor_ == b.floor_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncLaurent& a, const TruncLaurent& b) { return !(a == b); }

    // Agreement of the certified regions above the given exponent.
    bool agrees_with(const TruncLaurent& o, long above) const;

    std::optional<TruncLaurent> try_inverse() const;

private:
    void drop_below(long floor);
    long top_or(long fallback) const;

    TermMap terms_;                 // no zero coefficients stored
    std::optional<long> floor_;     // disengaged: exact polynomial
};

// Descending-power expansion of a fraction at L = infinity, exact at all
// exponents >= floor (u-units).
TruncLaurent expand_at_infinity(const RatWeight& w, long floor);

std::string to_string(const TruncLaurent& x);

}  // namespace mdt
