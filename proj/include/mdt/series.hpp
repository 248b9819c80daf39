#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mdt/laurent.hpp"
#include "mdt/rat_weight.hpp"
#include "mdt/trunc_laurent.hpp"

namespace mdt {

// Uniform coefficient-ring interface for truncated series.  Types provide
// one()/is_zero()/constant(Int)/try_inverse(); the GMP scalars are adapted
// below.
template <class R>
struct RingOps {
    static R zero() { return R{}; }
    static R one() { return R::one(); }
    static bool is_zero(const R& x) { return x.is_zero(); }
    static R from_int(const Int& n) { return R::constant(n); }
    static std::optional<R> try_inverse(const R& x) { return x.try_inverse(); }
};

template <>
struct RingOps<Int> {
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static bool is_zero(const Int& x) { return x == 0; }
    static Int from_int(const Int& n) { return n; }
    static std::optional<Int> try_inverse(const Int& x) {
        if (x == 1 || x == -1) return x;
        return std::nullopt;
    }
};

template <>
struct RingOps<Rat> {
    static Rat zero() { return 0; }
    static Rat one() { return 1; }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_int(const Int& n) { return Rat(n); }
    static std::optional<Rat> try_inverse(const Rat& x) {
        if (x == 0) return std::nullopt;
        return Rat(1) / x;
    }
};

// Formal power series in t truncated at a fixed order: all arithmetic is
// exact modulo t^(order+1).  Binary operations on mismatched orders truncate
// to the smaller order.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(long order)
        : coeffs_(static_cast<std::size_t>(order) + 1, RingOps<R>::zero()) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    static TruncSeries constant(long order, R c) {
        TruncSeries s(order);
        s[0] = std::move(c);
        return s;
    }
    static TruncSeries unit(long order) { return constant(order, RingOps<R>::one()); }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    R& operator[](long n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const R& operator[](long n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<R>& coeffs() const { return coeffs_; }

    TruncSeries truncated(long order) const {
        if (order >= this->order()) return *this;
        TruncSeries s(order);
        std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (long n = 0; n <= s.order(); ++n) s[n] = a[n] + b[n];
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (long n = 0; n <= s.order(); ++n) s[n] = a[n] - b[n];
        return s;
    }
    TruncSeries operator-() const {
        TruncSeries s(order());
        for (long n = 0; n <= order(); ++n) s[n] = -coeffs_[static_cast<std::size_t>(n)];
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (long i = 0; i <= s.order(); ++i) {
            if (RingOps<R>::is_zero(a[i])) continue;
            for (long j = 0; i + j <= s.order(); ++j) {
                if (RingOps<R>::is_zero(b[j])) continue;
                s[i + j] += a[i] * b[j];
            }
        }
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const R& c) {
        TruncSeries s(a.order());
        for (long n = 0; n <= s.order(); ++n) s[n] = a[n] * c;
        return s;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    std::vector<R> coeffs_;
};

template <class R>
TruncSeries<R> ts_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    return a * b;
}

// Multiplicative inverse modulo t^(order+1); the constant term must be a unit
// of the coefficient ring.
template <class R>
TruncSeries<R> ts_inv(const TruncSeries<R>& a) {
    auto c0 = RingOps<R>::try_inverse(a[0]);
    if (!c0) throw std::domain_error("non-unit constant term");
    TruncSeries<R> s(a.order());
    s[0] = *c0;
    for (long n = 1; n <= a.order(); ++n) {
        R acc = RingOps<R>::zero();
        for (long k = 1; k <= n; ++k) acc += a[k] * s[n - k];
        s[n] = -(*c0 * acc);
    }
    return s;
}

// Integer power by repeated squaring; requires constant term 1.
template <class R>
TruncSeries<R> ts_pow_int(const TruncSeries<R>& a, long e) {
    if (!(a[0] == RingOps<R>::one()))
        throw std::domain_error("series power requires constant term 1");
    TruncSeries<R> base = e < 0 ? ts_inv(a) : a;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncSeries<R> acc = TruncSeries<R>::unit(a.order());
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// Substitution t -> c * t^k: the coefficient of t^(nk) becomes c^n times the
// input coefficient of t^n.
template <class R>
TruncSeries<R> ts_rescale(const TruncSeries<R>& a, long k, const R& c) {
    if (k < 1) throw std::invalid_argument("ts_rescale: k must be >= 1");
    TruncSeries<R> s(a.order());
    R cn = RingOps<R>::one();
    for (long n = 0; n * k <= a.order(); ++n) {
        s[n * k] = a[n] * cn;
        cn = cn * c;
    }
    return s;
}

// One factor (1 - coeff * t^(t_exp)) ^ exp of an infinite product.
template <class R>
struct Factor {
    long t_exp;
    R coeff;
    Int exp;
};

template <class R>
using FactorStream = std::vector<Factor<R>>;

// Expansion of one factor via the generalized binomial series; handles
// arbitrarily large integer exponents without repeated multiplication.
template <class R>
TruncSeries<R> factor_expansion(const Factor<R>& f, long order) {
    if (f.t_exp < 1) throw std::invalid_argument("factor t-exponent must be >= 1");
    TruncSeries<R> s(order);
    Int binom(1);
    R cpow = RingOps<R>::one();
    for (long r = 0; r * f.t_exp <= order; ++r) {
        if (r > 0) {
            binom *= f.exp - (r - 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(r));
            cpow = cpow * (-f.coeff);
        }
        s[r * f.t_exp] = cpow * RingOps<R>::from_int(binom);
    }
    return s;
}

// Exact expansion of prod (1 - c t^m)^e modulo t^(order+1).
template <class R>
TruncSeries<R> factor_product(const FactorStream<R>& fs, long order) {
    TruncSeries<R> acc = TruncSeries<R>::unit(order);
    for (const auto& f : fs) {
        if (f.exp == 0 || f.t_exp > order) continue;
        acc *= factor_expansion(f, order);
    }
    return acc;
}

}  // namespace mdt
