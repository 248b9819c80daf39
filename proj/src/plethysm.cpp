#include "mdt/plethysm.hpp"

namespace mdt {

namespace {

void require_augmented_rat(const TruncSeries<RatWeight>& a) {
    if (!a[0].is_zero()) throw std::domain_error("Exp of non-augmented series");
}

// sum_{k>=1} psi_k(a)(t^k)/k, the additive shadow of Exp.
TruncSeries<RatWeight> adams_log_series(const TruncSeries<RatWeight>& a) {
    TruncSeries<RatWeight> s(a.order());
    for (long k = 1; k <= a.order(); ++k) {
        const Rat inv_k(1, k);
        for (long n = 1; k * n <= a.order(); ++n) {
            if (a[n].is_zero()) continue;
            s[k * n] += adams(k, a[n]) * RatWeight(inv_k);
        }
    }
    return s;
}

// exp of a series with zero constant term, via e' = s' e.
TruncSeries<RatWeight> series_exp(const TruncSeries<RatWeight>& s) {
    TruncSeries<RatWeight> e(s.order());
    e[0] = RatWeight::one();
    for (long n = 1; n <= s.order(); ++n) {
        RatWeight acc;
        for (long m = 1; m <= n; ++m) {
            if (s[m].is_zero()) continue;
            acc += s[m] * e[n - m] * RatWeight(Rat(m));
        }
        e[n] = acc * RatWeight(Rat(1, n));
    }
    return e;
}

// log of a series with constant term 1, via f' = l' f.
TruncSeries<RatWeight> series_log(const TruncSeries<RatWeight>& f) {
    if (f[0] != RatWeight::one()) throw std::domain_error("Log requires constant term 1");
    TruncSeries<RatWeight> l(f.order());
    for (long n = 1; n <= f.order(); ++n) {
        RatWeight acc = f[n] * RatWeight(Rat(n));
        for (long m = 1; m < n; ++m) {
            if (l[m].is_zero()) continue;
            acc -= l[m] * f[n - m] * RatWeight(Rat(m));
        }
        l[n] = acc * RatWeight(Rat(1, n));
    }
    return l;
}

}  // namespace

TruncSeries<RatWeight> lift_to_rat(const TruncSeries<MotWeight>& s) {
    TruncSeries<RatWeight> r(s.order());
    for (long n = 0; n <= s.order(); ++n) r[n] = RatWeight(s[n]);
    return r;
}

TruncSeries<MotWeight> reduce_to_mot(const TruncSeries<RatWeight>& s, const char* error_message) {
    TruncSeries<MotWeight> r(s.order());
    for (long n = 0; n <= s.order(); ++n) r[n] = s[n].to_polynomial(error_message);
    return r;
}

TruncSeries<MotWeight> exp_pleth(const TruncSeries<MotWeight>& a) {
    if (!a[0].is_zero()) throw std::domain_error("Exp of non-augmented series");
    FactorStream<MotWeight> fs;
    for (long n = 1; n <= a.order(); ++n)
        for (const auto& [i, c] : a[n].terms())
            fs.push_back({n, MotWeight::monomial(i, 1), Int(-c)});
    return factor_product(fs, a.order());
}

TruncSeries<RatWeight> exp_pleth(const TruncSeries<RatWeight>& a) {
    require_augmented_rat(a);
    return series_exp(adams_log_series(a));
}

TruncSeries<MotWeight> exp_pleth_adams(const TruncSeries<MotWeight>& a) {
    if (!a[0].is_zero()) throw std::domain_error("Exp of non-augmented series");
    return reduce_to_mot(exp_pleth(lift_to_rat(a)),
                         "plethystic exponential failed to reduce to polynomial classes");
}

TruncSeries<RatWeight> log_pleth(const TruncSeries<RatWeight>& f) {
    const TruncSeries<RatWeight> g = series_log(f);
    TruncSeries<RatWeight> a(f.order());
    for (long k = 1; k <= f.order(); ++k) {
        const int mu = moebius(k);
        if (mu == 0) continue;
        const Rat mu_over_k(mu, k);
        for (long n = 1; k * n <= f.order(); ++n) {
            if (g[n].is_zero()) continue;
            a[k * n] += adams(k, g[n]) * RatWeight(mu_over_k);
        }
    }
    return a;
}

TruncSeries<RatWeight> log_pleth(const TruncSeries<MotWeight>& f) {
    return log_pleth(lift_to_rat(f));
}

TruncSeries<MotWeight> pow_class(const TruncSeries<MotWeight>& f, const MotWeight& x) {
    TruncSeries<RatWeight> a = log_pleth(f) * RatWeight(x);
    return reduce_to_mot(exp_pleth(a),
                         "power-structure coefficient failed to reduce to a polynomial class");
}

TruncSeries<RatWeight> pow_class(const TruncSeries<RatWeight>& f, const RatWeight& x) {
    return exp_pleth(log_pleth(f) * x);
}

}  // namespace mdt
