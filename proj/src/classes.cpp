#include "mdt/classes.hpp"

namespace mdt {

MotWeight class_lfact(long n) {
    if (n < 0) throw std::invalid_argument("class_lfact: n must be >= 0");
    MotWeight r = MotWeight::one();
    for (long k = 1; k <= n; ++k) r *= lefschetz(k) - MotWeight::one();
    return r;
}

MotWeight class_gl(long n) { return lefschetz(n * (n - 1) / 2) * class_lfact(n); }

MotWeight gaussian_binomial(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian binomial index out of range");
    auto q = MotWeight::try_exact_divide(class_lfact(n), class_lfact(n - k) * class_lfact(k));
    if (!q) throw std::logic_error("gaussian binomial division not exact");
    return *q;
}

MotWeight proj_vir(long n) {
    const MotWeight num = lefschetz(n + 1) - MotWeight::one();
    if (num.is_zero()) return MotWeight{};
    auto q = MotWeight::try_exact_divide(num, lefschetz(1) - MotWeight::one());
    return vir_normalize(*q, n);
}

MotWeight vir_normalize(const MotWeight& x, long d) { return x * lefschetz_half(-d); }

WeightPoly realize_weight(const MotWeight& x) {
    WeightPoly r;
    for (const auto& [e, c] : x.terms()) r += WeightPoly::monomial(e, c);
    return r;
}

TruncSeries<WeightPoly> realize_weight(const TruncSeries<MotWeight>& s) {
    TruncSeries<WeightPoly> r(s.order());
    for (long n = 0; n <= s.order(); ++n) r[n] = realize_weight(s[n]);
    return r;
}

EPoly realize_epoly(const MotWeight& x) {
    EPoly r;
    for (const auto& [e, c] : x.terms()) r += EPoly::monomial(e, c);
    return r;
}

Int realize_euler(const MotWeight& x) { return x.evaluate_at_one(); }
Int realize_euler(const WeightPoly& x) { return x.evaluate_at_one(); }

TruncSeries<Int> realize_euler(const TruncSeries<MotWeight>& s) {
    TruncSeries<Int> r(s.order());
    for (long n = 0; n <= s.order(); ++n) r[n] = realize_euler(s[n]);
    return r;
}

TruncSeries<Int> realize_euler(const TruncSeries<WeightPoly>& s) {
    TruncSeries<Int> r(s.order());
    for (long n = 0; n <= s.order(); ++n) r[n] = realize_euler(s[n]);
    return r;
}

long BettiVector::euler() const {
    long chi = 0;
    for (int d = 0; d < 7; ++d) chi += (d % 2 == 0) ? b[d] : -b[d];
    return chi;
}

bool BettiVector::has_odd_cohomology() const { return b[1] != 0 || b[3] != 0 || b[5] != 0; }

WeightPoly BettiVector::weight_class() const {
    WeightPoly r;
    for (int d = 0; d < 7; ++d)
        if (b[d] != 0) r += q_half_power(d) * Int(b[d]);
    return r;
}

MotWeight BettiVector::tate_class() const {
    if (has_odd_cohomology())
        throw std::domain_error("odd cohomology has no Tate motivic class");
    MotWeight r;
    for (int i = 0; i <= 3; ++i)
        if (b[2 * i] != 0) r += lefschetz(i) * Int(b[2 * i]);
    return r;
}

BettiVector BettiVector::projective_space_3() { return BettiVector{{1, 0, 1, 0, 1, 0, 1}}; }

}  // namespace mdt
