#include "mdt/dtgen.hpp"

#include "mdt/partitions.hpp"

namespace mdt {

namespace {

constexpr const char* kRecursionError = "recursion polynomiality violated";

TruncSeries<RatWeight> rescale_rat(const TruncSeries<RatWeight>& s, const MotWeight& c) {
    return ts_rescale(s, 1, RatWeight(c));
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::product: return "product";
        case Route::recursion: return "recursion";
        case Route::exp_formula: return "exp_formula";
        case Route::power_formula: return "power_formula";
        case Route::weight_product: return "weight_product";
    }
    return "unknown";
}

TruncSeries<RatWeight> feit_fine_series(long order) {
    const RatWeight c = rf_reduce(lefschetz(2), lefschetz(1) - MotWeight::one());
    TruncSeries<RatWeight> arg(order);
    for (long n = 1; n <= order; ++n) arg[n] = c;
    return exp_pleth(arg);
}

MotWeight commuting_class(long n, const TruncSeries<RatWeight>& feit_fine) {
    return (feit_fine[n] * RatWeight(class_gl(n))).to_polynomial(kRecursionError);
}

TruncSeries<TruncLaurent> feit_fine_double_product(long order, long floor) {
    // A factor with j > jmax contributes only at u-exponents below
    // top(coefficient) + (2 - 2j) <= 2*order + 2 - 2j, so the cutoff below
    // keeps everything above `floor` exact.  Conservative, not sharp.
    const long depth = floor < 0 ? (-floor + 1) / 2 : 0;
    const long jmax = order + depth + 2;
    FactorStream<TruncLaurent> fs;
    for (long m = 1; m <= order; ++m)
        for (long j = 0; j <= jmax; ++j)
            fs.push_back({m, TruncLaurent::monomial(2 - 2 * j, Rat(1)), Int(-1)});
    TruncSeries<TruncLaurent> full = factor_product(fs, order);
    TruncSeries<TruncLaurent> out(order);
    for (long n = 0; n <= order; ++n) out[n] = full[n].truncated_below(floor);
    return out;
}

ZSeries z_c3_product(long order) {
    FactorStream<MotWeight> fs;
    for (long m = 1; m <= order; ++m)
        for (long k = 0; k < m; ++k)
            fs.push_back({m, MotWeight::monomial(2 * k + 4 - m, (m % 2 == 0) ? 1 : -1), Int(-1)});
    return {Route::product, factor_product(fs, order)};
}

ZSeries z_c3_recursion(long order) {
    const TruncSeries<RatWeight> ff = feit_fine_series(order);
    std::vector<MotWeight> commuting;
    commuting.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) commuting.push_back(commuting_class(n, ff));

    std::vector<MotWeight> w(static_cast<std::size_t>(order) + 1);
    TruncSeries<MotWeight> z(order);
    w[0] = MotWeight::one();
    z[0] = MotWeight::one();
    for (long n = 1; n <= order; ++n) {
        MotWeight acc = lefschetz(n * (n + 1)) * commuting[n];
        for (long k = 0; k < n; ++k)
            acc -= gaussian_binomial(n, k) * lefschetz((n - k) * (n + 2 * k)) *
                   commuting[n - k] * w[k];
        w[n] = acc;
        z[n] = rf_reduce(w[n] * lefschetz_half(-3 * n * n), class_lfact(n))
                   .to_polynomial(kRecursionError);
    }
    return {Route::recursion, z};
}

DegreeReport twisted_quotient_check(long order) {
    const TruncSeries<RatWeight> ff = feit_fine_series(order);
    const TruncSeries<RatWeight> lhs = rescale_rat(ff, lefschetz_half(1));
    const TruncSeries<RatWeight> rhs =
        lift_to_rat(z_c3_product(order).series) * rescale_rat(ff, lefschetz_half(-1));
    DegreeReport rep{"twisted_quotient", order, {}, std::nullopt, "", ""};
    for (long n = 0; n <= order; ++n) {
        const bool ok = lhs[n] == rhs[n];
        rep.degree_ok.push_back(ok);
        if (!ok && !rep.first_failure) {
            rep.first_failure = n;
            rep.lhs_sample = to_string(lhs[n]);
            rep.rhs_sample = to_string(rhs[n]);
        }
    }
    return rep;
}

ZSeries z_x_exp(const MotWeight& x, long order) {
    // (1 + L^(1/2) t)(1 + L^(-1/2) t) in the u-convention.
    TruncSeries<MotWeight> den(order);
    den[0] = MotWeight::one();
    if (order >= 1) den[1] = -(MotWeight::monomial(1, 1) + MotWeight::monomial(-1, 1));
    if (order >= 2) den[2] = MotWeight::one();
    const TruncSeries<MotWeight> inv = ts_inv(den);

    const MotWeight x_vir = vir_normalize(x, 3);
    TruncSeries<MotWeight> arg(order);
    for (long n = 1; n <= order; ++n) arg[n] = -(x_vir * inv[n - 1]);
    const TruncSeries<MotWeight> e = exp_pleth(arg);
    return {Route::exp_formula, ts_rescale(e, 1, MotWeight::constant(-1))};
}

ZSeries z_punctual_c3(long order) {
    ZSeries z = z_x_exp(MotWeight::one(), order);
    return {Route::exp_formula, z.series};
}

TruncSeries<MotWeight> z_power_class(const TruncSeries<MotWeight>& f, const MotWeight& x) {
    const MotWeight minus_one = MotWeight::constant(-1);
    const TruncSeries<MotWeight> flipped = ts_rescale(f, 1, minus_one);
    return ts_rescale(pow_class(flipped, x), 1, minus_one);
}

ZSeries z_x_power(const MotWeight& x, long order) {
    return {Route::power_formula, z_power_class(z_punctual_c3(order).series, x)};
}

ZSeries unified_formula(long d, const MotWeight& x, long order) {
    if (d < 0) throw std::invalid_argument("unified formula: dimension must be >= 0");
    if (d > 3 && order > 3)
        throw std::domain_error(
            "unified formula beyond t^3 is undefined in dimension > 3");
    const MotWeight sign = MotWeight::constant((d % 2 == 0) ? 1 : -1);

    TruncSeries<MotWeight> inner_arg(order);
    if (order >= 1) inner_arg[1] = sign * proj_vir(d - 2);
    const TruncSeries<MotWeight> inner = exp_pleth(inner_arg);

    const MotWeight x_vir = vir_normalize(x, d);
    TruncSeries<MotWeight> outer_arg(order);
    for (long n = 1; n <= order; ++n) outer_arg[n] = sign * x_vir * inner[n - 1];
    const TruncSeries<MotWeight> w = exp_pleth(outer_arg);
    return {Route::exp_formula, ts_rescale(w, 1, sign)};
}

TruncSeries<MotWeight> goettsche_surface(const MotWeight& s, long order) {
    TruncSeries<MotWeight> arg(order);
    for (long n = 1; n <= order; ++n) arg[n] = s * lefschetz(n - 1);
    return exp_pleth(arg);
}

TruncSeries<MotWeight> cheah_low(long d) {
    if (d < 1) throw std::invalid_argument("cheah_low: dimension must be >= 1");
    TruncSeries<MotWeight> s(3);
    s[0] = MotWeight::one();
    s[1] = MotWeight::one();
    s[2] = gaussian_binomial(d, 1);
    s[3] = gaussian_binomial(d + 1, 2);
    return s;
}

TruncSeries<WeightPoly> weight_partition_function(const BettiVector& b, long order) {
    // In M_{(d-3)/2}(-t, -q^(1/2)) the (m,k) factor becomes
    // (1 - (-1)^d q^((d-2+2k-m)/2) t^m)^(-1), raised to (-1)^d b_d.
    FactorStream<WeightPoly> fs;
    for (int d = 0; d < 7; ++d) {
        if (b.b[d] == 0) continue;
        const Int exponent = (d % 2 == 0) ? Int(-b.b[d]) : Int(b.b[d]);
        const Int sign = (d % 2 == 0) ? 1 : -1;
        for (long m = 1; m <= order; ++m)
            for (long k = 0; k < m; ++k)
                fs.push_back({m, q_half_power(d - 2 + 2 * k - m) * sign, exponent});
    }
    return factor_product(fs, order);
}

TruncSeries<WeightPoly> refined_macmahon(long two_delta, long order) {
    FactorStream<WeightPoly> fs;
    for (long m = 1; m <= order; ++m)
        for (long k = 0; k < m; ++k)
            fs.push_back({m, q_half_power(two_delta + 1 + 2 * k - m), Int(-1)});
    return factor_product(fs, order);
}

TruncSeries<Int> macmahon_series(long order) {
    FactorStream<Int> fs;
    for (long m = 1; m <= order; ++m) fs.push_back({m, Int(1), Int(-m)});
    return factor_product(fs, order);
}

TruncSeries<Int> macmahon_guess(long d, long order) {
    if (d < 2) throw std::invalid_argument("macmahon_guess: dimension must be >= 2");
    FactorStream<Int> fs;
    for (long m = 1; m <= order; ++m)
        fs.push_back({m, Int(1), -binomial(m + d - 3, static_cast<unsigned long>(d - 2))});
    return factor_product(fs, order);
}

GuessComparison compare_guess(long d, long order, int threads) {
    GuessComparison cmp;
    cmp.dim = d;
    cmp.order = order;
    const TruncSeries<Int> g = macmahon_guess(d, order);
    cmp.counted = count_dpartitions_upto(static_cast<int>(d), static_cast<int>(order), threads);
    for (long n = 0; n <= order; ++n) {
        cmp.guess.push_back(g[n]);
        if (!cmp.first_mismatch && g[n] != cmp.counted[static_cast<std::size_t>(n)])
            cmp.first_mismatch = n;
    }
    return cmp;
}

}  // namespace mdt
