#include "mdt/rat_weight.hpp"

#include <algorithm>
#include <vector>

namespace mdt {

namespace {

// Dense ascending coefficient vector of an ordinary polynomial (low degree 0).
using DensePoly = std::vector<Rat>;

DensePoly to_dense(const MotWeight& p) {
    DensePoly v(static_cast<std::size_t>(p.degree()) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = Rat(c);
    return v;
}

void trim(DensePoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_monic(DensePoly& v) {
    const Rat lead = v.back();
    for (auto& c : v) c /= lead;
}

// r = r mod d, both nonzero, d monic.
void mod_in_place(DensePoly& r, const DensePoly& d) {
    while (r.size() >= d.size()) {
        const Rat q = r.back();
        const std::size_t off = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= q * d[i];
        trim(r);
        if (r.empty()) return;
    }
}

// Clear denominators, divide by content, force positive leading coefficient.
MotWeight to_primitive(const DensePoly& v) {
    Int lcm(1);
    for (const auto& c : v)
        if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    MotWeight p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rat scaled = v[i] * Rat(lcm);
        p += MotWeight::monomial(static_cast<long>(i), scaled.get_num());
    }
    Int cont = p.content();
    if (p.lead_coeff() < 0) cont = -cont;
    auto q = MotWeight::try_exact_divide(p, MotWeight::constant(cont));
    return *q;
}

// Primitive integer gcd over Q of two nonzero ordinary polynomials, via the
// Euclidean algorithm on monic remainders.
MotWeight poly_gcd_primitive(const MotWeight& a, const MotWeight& b) {
    DensePoly r0 = to_dense(a);
    DensePoly r1 = to_dense(b);
    while (!r1.empty()) {
        make_monic(r1);
        mod_in_place(r0, r1);
        std::swap(r0, r1);
    }
    return to_primitive(r0);
}

}  // namespace

RatWeight::RatWeight(MotWeight n, MotWeight d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("division by zero weight");
    normalize();
}

RatWeight::RatWeight(const Rat& r)
    : num_(MotWeight::constant(r.get_num())), den_(MotWeight::constant(r.get_den())) {
    // incoming rationals need not be canonical
    normalize();
}

void RatWeight::normalize() {
    if (num_.is_zero()) {
        den_ = MotWeight::one();
        return;
    }
    // Move pure u-power content into the numerator.
    const long shift = num_.low_degree() - den_.low_degree();
    num_ = num_.shifted(-num_.low_degree());
    den_ = den_.shifted(-den_.low_degree());

    if (den_ != MotWeight::one()) {
        const MotWeight g = poly_gcd_primitive(num_, den_);
        if (g.degree() > 0 || g.lead_coeff() != 1) {
            num_ = *MotWeight::try_exact_divide(num_, g);
            den_ = *MotWeight::try_exact_divide(den_, g);
        }
    }

    Int r;
    mpz_gcd(r.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.lead_coeff() < 0) r = -r;
    if (r != 1) {
        num_ = *MotWeight::try_exact_divide(num_, MotWeight::constant(r));
        den_ = *MotWeight::try_exact_divide(den_, MotWeight::constant(r));
    }
    num_ = num_.shifted(shift);
}

MotWeight RatWeight::to_polynomial(const char* error_message) const {
    if (!is_polynomial()) throw std::domain_error(error_message);
    return num_;
}

RatWeight& RatWeight::operator+=(const RatWeight& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatWeight& RatWeight::operator-=(const RatWeight& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatWeight& RatWeight::operator*=(const RatWeight& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatWeight& RatWeight::operator/=(const RatWeight& o) {
    if (o.is_zero()) throw std::domain_error("division by zero weight");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatWeight RatWeight::operator-() const {
    RatWeight r = *this;
    r.num_ = -r.num_;
    return r;
}

std::optional<RatWeight> RatWeight::try_inverse() const {
    if (is_zero()) return std::nullopt;
    return RatWeight(den_, num_);
}

RatWeight adams(long k, const RatWeight& w) {
    if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
    return RatWeight(w.num().substitute_power(k), w.den().substitute_power(k));
}

Rat evaluate(const RatWeight& w, const Rat& u_value) {
    const Rat d = w.den().evaluate(u_value);
    if (d == 0) throw std::domain_error("specialization pole");
    return w.num().evaluate(u_value) / d;
}

std::string to_string(const RatWeight& w) {
    if (w.is_polynomial()) return to_string(w.num());
    return "(" + to_string(w.num()) + ") / (" + to_string(w.den()) + ")";
}

}  // namespace mdt
