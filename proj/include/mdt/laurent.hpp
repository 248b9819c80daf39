#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "mdt/ints.hpp"

namespace mdt {

// Laurent polynomial in a formal generator with Int coefficients and integer
// (possibly negative) exponents.  Both instantiations below store the
// sign-twisted half-power generator:
//
//   MotWeight  stores u = -L^(1/2),  so L = u^2 and L^(1/2) = -u;
//   WeightPoly stores w = -q^(1/2),  the image of u under W.
//
// This convention turns sym^n(generator) = generator^n into a theorem, so
// Adams operations are monomial substitutions and the power structure acts
// monomially on terms.  Output routines fold the (-1)^k sign back into the
// coefficient and print half-powers of L resp. q.
template <class Tag>
class Laurent {
public:
    using TermMap = std::map<long, Int>;

    Laurent() = default;

    static Laurent monomial(long exponent, Int coeff) {
        Laurent r;
        if (coeff != 0) r.terms_.emplace(exponent, std::move(coeff));
        return r;
    }
    static Laurent constant(Int c) { return monomial(0, std::move(c)); }
    static Laurent one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Degree of zero is undefined; every caller guards.
    long degree() const {
        if (terms_.empty()) throw std::domain_error("degree of zero weight");
        return terms_.rbegin()->first;
    }
    long low_degree() const {
        if (terms_.empty()) throw std::domain_error("degree of zero weight");
        return terms_.begin()->first;
    }
    Int coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int lead_coeff() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }

    bool is_monomial() const { return terms_.size() == 1; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Int(-c));
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Int(ca * cb));
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator*(const Laurent& a, const Int& s) {
        Laurent r;
        if (s != 0)
            for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, Int(c * s));
        return r;
    }
    friend Laurent operator*(const Int& s, const Laurent& a) { return a * s; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Monomial substitution generator -> generator^k (k >= 1): the Adams
    // operation on polynomial classes.
    Laurent substitute_power(long k) const {
        if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
        return r;
    }

    // Multiplication by generator^k.
    Laurent shifted(long k) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    // Value at generator = x.  A negative exponent at x = 0 is a pole.
    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            if (x == 0 && e < 0) throw std::domain_error("specialization pole");
            acc += Rat(c) * rat_pow(x, e);
        }
        return acc;
    }

    // Sum of coefficients: the value at generator = 1 (Euler specialization).
    Int evaluate_at_one() const {
        Int acc(0);
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    // gcd of all coefficients, normalized positive; 0 for the zero weight.
    Int content() const {
        Int g(0);
        for (const auto& [e, c] : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // Units of Z[g, g^{-1}] are +-g^k.
    std::optional<Laurent> try_inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) return std::nullopt;
        return monomial(-e, c);
    }

    // Exact Laurent division: returns num/den when the quotient exists over
    // Z[g, g^{-1}], nullopt otherwise.
    static std::optional<Laurent> try_exact_divide(const Laurent& num, const Laurent& den) {
        if (den.is_zero()) throw std::domain_error("division by zero weight");
        if (num.is_zero()) return Laurent{};
        // Shift both operands to ordinary polynomials with nonzero constant
        // term, divide classically, then shift the quotient back.
        const long shift = num.low_degree() - den.low_degree();
        Laurent rem = num.shifted(-num.low_degree());
        const Laurent d = den.shifted(-den.low_degree());
        const long dd = d.degree();
        const Int dl = d.lead_coeff();
        Laurent quot;
        while (!rem.is_zero() && rem.degree() >= dd) {
            Int q;
            Int r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lead_coeff().get_mpz_t(),
                        dl.get_mpz_t());
            if (r != 0) return std::nullopt;
            Laurent t = monomial(rem.degree() - dd, q);
            quot += t;
            rem -= t * d;
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot.shifted(shift);
    }

private:
    void add_term(long e, Int c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

struct LefschetzHalfTag {
    static constexpr const char* symbol = "L";
};
struct WeightHalfTag {
    static constexpr const char* symbol = "q";
};

using MotWeight = Laurent<LefschetzHalfTag>;
using WeightPoly = Laurent<WeightHalfTag>;

// L^n = u^(2n).
inline MotWeight lefschetz(long n = 1) { return MotWeight::monomial(2 * n, 1); }

// L^(p/2) = (-u)^p.
inline MotWeight lefschetz_half(long p) { return MotWeight::monomial(p, (p % 2 == 0) ? 1 : -1); }

// q^(p/2) = (-w)^p in the stored convention.
inline WeightPoly q_half_power(long p) { return WeightPoly::monomial(p, (p % 2 == 0) ? 1 : -1); }

namespace detail {

inline std::string half_exponent_string(const char* symbol, long k) {
    // k counts half-powers of the printed base.
    std::ostringstream os;
    os << symbol;
    if (k == 2) return os.str();
    if (k % 2 == 0) {
        long e = k / 2;
        if (e >= 0)
            os << '^' << e;
        else
            os << "^(" << e << ')';
    } else {
        os << "^(" << k << "/2)";
    }
    return os.str();
}

}  // namespace detail

// Canonical text form: descending exponents, half-powers of L (resp. q), the
// (-1)^k of the stored generator folded into the printed coefficient.
template <class Tag>
std::string to_string(const Laurent<Tag>& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const long k = it->first;
        Int c = (k % 2 == 0) ? it->second : Int(-it->second);
        const bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Int a = neg ? Int(-c) : c;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            os << detail::half_exponent_string(Tag::symbol, k);
        }
    }
    return os.str();
}

}  // namespace mdt
