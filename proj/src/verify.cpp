#include "mdt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "mdt/partitions.hpp"

namespace mdt {

namespace {

IdentityResult compare_series(const std::string& name, const TruncSeries<MotWeight>& lhs,
                              const TruncSeries<MotWeight>& rhs) {
    IdentityResult r{name, std::min(lhs.order(), rhs.order()), true, std::nullopt, "", "", ""};
    for (long n = 0; n <= r.order; ++n) {
        if (lhs[n] == rhs[n]) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = to_string(lhs[n]);
        r.rhs_sample = to_string(rhs[n]);
        break;
    }
    return r;
}

IdentityResult compare_series(const std::string& name, const TruncSeries<WeightPoly>& lhs,
                              const TruncSeries<WeightPoly>& rhs) {
    IdentityResult r{name, std::min(lhs.order(), rhs.order()), true, std::nullopt, "", "", ""};
    for (long n = 0; n <= r.order; ++n) {
        if (lhs[n] == rhs[n]) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = to_string(lhs[n]);
        r.rhs_sample = to_string(rhs[n]);
        break;
    }
    return r;
}

IdentityResult from_degree_report(const DegreeReport& rep) {
    return IdentityResult{rep.identity,    rep.order,      rep.pass(), rep.first_failure,
                          rep.lhs_sample,  rep.rhs_sample, ""};
}

MotWeight random_mot_weight(std::mt19937_64& rng, int max_terms = 3, long max_abs_exp = 4,
                            long max_abs_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp_dist(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long> coeff_dist(-max_abs_coeff, max_abs_coeff);
    MotWeight w;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) w += MotWeight::monomial(exp_dist(rng), coeff_dist(rng));
    return w;
}

TruncSeries<MotWeight> random_exp_argument(std::mt19937_64& rng, long order) {
    TruncSeries<MotWeight> a(order);
    for (long n = 1; n <= order; ++n) a[n] = random_mot_weight(rng);
    return a;
}

}  // namespace

IdentityResult check_recursion_vs_product(long order) {
    try {
        return compare_series("z_c3 recursion = product at order " + std::to_string(order),
                              z_c3_recursion(order).series, z_c3_product(order).series);
    } catch (const std::domain_error& e) {
        return IdentityResult{"z_c3 recursion = product at order " + std::to_string(order),
                              order, false, std::nullopt, "", "", e.what()};
    }
}

IdentityResult check_twisted_quotient(long order) {
    return from_degree_report(twisted_quotient_check(order));
}

IdentityResult check_euler_signed_macmahon(long order, int threads) {
    const long n_max = std::min(order, partition_ceiling(3));
    IdentityResult r{"euler(z_c3) = signed plane-partition counts", n_max, true,
                     std::nullopt, "", "", ""};
    const TruncSeries<Int> euler = realize_euler(z_c3_product(n_max).series);
    const std::vector<Int> counts = count_dpartitions_upto(3, static_cast<int>(n_max), threads);
    for (long n = 0; n <= n_max; ++n) {
        const Int expected = (n % 2 == 0) ? counts[static_cast<std::size_t>(n)]
                                          : Int(-counts[static_cast<std::size_t>(n)]);
        if (euler[n] == expected) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = euler[n].get_str();
        r.rhs_sample = expected.get_str();
        break;
    }
    return r;
}

IdentityResult check_zx_cross_route(const std::string& label, const MotWeight& x, long order) {
    return compare_series("z_x exp formula = power formula for " + label,
                          z_x_exp(x, order).series, z_x_power(x, order).series);
}

IdentityResult check_weight_vs_betti(const std::string& label, const BettiVector& b,
                                     long order) {
    const TruncSeries<WeightPoly> via_class =
        realize_weight(z_x_exp(b.tate_class(), order).series);
    const TruncSeries<WeightPoly> via_betti = weight_partition_function(b, order);
    return compare_series("weight realization of Z_" + label + " = Betti product formula",
                          via_class, via_betti);
}

IdentityResult check_weight_vs_betti_p3(long order) {
    return check_weight_vs_betti("[P^3]", BettiVector::projective_space_3(), order);
}

IdentityResult check_dim0_points(long n_points, long order) {
    const ZSeries z = unified_formula(0, MotWeight::constant(n_points), order);
    TruncSeries<MotWeight> expected(order);
    for (long n = 0; n <= order; ++n)
        expected[n] = MotWeight::constant(binomial(n_points, static_cast<unsigned long>(n)));
    return compare_series("unified d=0 equals (1+t)^" + std::to_string(n_points), z.series,
                          expected);
}

IdentityResult check_dim1_p1(long order) {
    const MotWeight p1 = MotWeight::one() + lefschetz(1);
    const ZSeries z = unified_formula(1, p1, order);
    TruncSeries<MotWeight> expected(order);
    for (long n = 0; n <= order; ++n) {
        MotWeight pn;  // [P^n] = 1 + L + ... + L^n
        for (long i = 0; i <= n; ++i) pn += lefschetz(i);
        expected[n] = pn * lefschetz_half(-n);
    }
    return compare_series("unified d=1 for [P^1] equals L^(-n/2) [P^n]", z.series, expected);
}

IdentityResult check_dim2_goettsche(long order, int threads) {
    const MotWeight plane = lefschetz(2);
    const ZSeries z = unified_formula(2, plane, order);
    const TruncSeries<MotWeight> unnormalized = goettsche_surface(plane, order);
    TruncSeries<MotWeight> expected(order);
    for (long n = 0; n <= order; ++n) expected[n] = unnormalized[n] * lefschetz(-n);
    IdentityResult r = compare_series("unified d=2 for [C^2] equals normalized Goettsche",
                                      z.series, expected);
    if (!r.pass) return r;

    const long n_max = std::min(order, partition_ceiling(2));
    const TruncSeries<Int> euler = realize_euler(z.series.truncated(n_max));
    const std::vector<Int> counts = count_dpartitions_upto(2, static_cast<int>(n_max), threads);
    for (long n = 0; n <= n_max; ++n) {
        if (euler[n] == counts[static_cast<std::size_t>(n)]) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = euler[n].get_str();
        r.rhs_sample = counts[static_cast<std::size_t>(n)].get_str();
        r.note = "euler specialization vs 2d partition counts";
        break;
    }
    return r;
}

IdentityResult check_cheah_extension(long d) {
    // Up to three points Hilb^n(C^d) is smooth, so the virtual series is the
    // L^(-nd/2)-rescaled power of the punctual class series.
    const ZSeries ext = unified_formula(d, lefschetz(d), 3);
    const TruncSeries<MotWeight> assembled = ts_rescale(
        pow_class(cheah_low(d), lefschetz(d)), 1, lefschetz_half(-d));
    return compare_series("unified extension d=" + std::to_string(d) +
                              " matches punctual assembly to t^3",
                          ext.series, assembled);
}

IdentityResult check_refined_macmahon_vs_sum(long two_delta, long order) {
    const long n_max = std::min(order, partition_ceiling(3));
    const std::string delta = (two_delta % 2 == 0) ? std::to_string(two_delta / 2)
                                                   : std::to_string(two_delta) + "/2";
    return compare_series("refined MacMahon product = statistics sum, delta=" + delta,
                          refined_macmahon(two_delta, n_max), refined_sum(n_max, two_delta));
}

IdentityResult check_refined_specialization(long order, int threads) {
    const long n_max = std::min(order, partition_ceiling(3));
    IdentityResult r{"refined MacMahon at q^(1/2)=1 equals M(t) and counts", n_max, true,
                     std::nullopt, "", "", ""};
    const TruncSeries<WeightPoly> refined = refined_macmahon(1, n_max);
    const TruncSeries<Int> m = macmahon_series(n_max);
    const std::vector<Int> counts = count_dpartitions_upto(3, static_cast<int>(n_max), threads);
    for (long n = 0; n <= n_max; ++n) {
        // q^(1/2) = 1 is the signed sum over the stored generator w = -q^(1/2).
        Int specialized(0);
        for (const auto& [e, c] : refined[n].terms())
            specialized += (e % 2 == 0) ? c : Int(-c);
        if (specialized == m[n] && m[n] == counts[static_cast<std::size_t>(n)]) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = specialized.get_str();
        r.rhs_sample = m[n].get_str();
        break;
    }
    return r;
}

IdentityResult check_guess_agreement(long d, long order, int threads) {
    const long n_max = std::min(order, partition_ceiling(static_cast<int>(d)));
    const GuessComparison cmp = compare_guess(d, n_max, threads);
    IdentityResult r{"MacMahon guess d=" + std::to_string(d) + " matches enumeration",
                     n_max, !cmp.first_mismatch.has_value(), cmp.first_mismatch, "", "", ""};
    if (cmp.first_mismatch) {
        const auto n = static_cast<std::size_t>(*cmp.first_mismatch);
        r.lhs_sample = cmp.guess[n].get_str();
        r.rhs_sample = cmp.counted[n].get_str();
    }
    return r;
}

IdentityResult check_guess_failure_dim4(long order, int threads) {
    const long n_max = std::min(order, partition_ceiling(4));
    const GuessComparison cmp = compare_guess(4, n_max, threads);
    IdentityResult r{"MacMahon guess fails in dimension 4", n_max,
                     cmp.first_mismatch.has_value(), std::nullopt, "", "", ""};
    if (cmp.first_mismatch) {
        const auto n = static_cast<std::size_t>(*cmp.first_mismatch);
        r.note = "first mismatch at n=" + std::to_string(*cmp.first_mismatch) + ": guess " +
                 cmp.guess[n].get_str() + ", enumeration " + cmp.counted[n].get_str();
    } else {
        r.note = "no mismatch found up to n=" + std::to_string(n_max);
    }
    return r;
}

IdentityResult check_double_product_vs_expansion(long order, long floor) {
    const long n_max = std::min(order, 6L);
    IdentityResult r{"Feit-Fine double product = expansion of Exp-route coefficients", n_max,
                     true, std::nullopt, "", "", ""};
    const TruncSeries<TruncLaurent> dp = feit_fine_double_product(n_max, floor);
    const TruncSeries<RatWeight> ff = feit_fine_series(n_max);
    for (long n = 0; n <= n_max; ++n) {
        const TruncLaurent expansion = expand_at_infinity(ff[n], floor);
        if (dp[n].agrees_with(expansion, floor)) continue;
        r.pass = false;
        r.first_failure_degree = n;
        r.lhs_sample = to_string(dp[n]);
        r.rhs_sample = to_string(expansion);
        break;
    }
    return r;
}

IdentityResult check_commuting_class_degrees(long order) {
    IdentityResult r{"commuting classes reduce to polynomials of degree n^2+n", order, true,
                     std::nullopt, "", "", ""};
    const TruncSeries<RatWeight> ff = feit_fine_series(order);
    for (long n = 0; n <= order; ++n) {
        try {
            const MotWeight c = commuting_class(n, ff);
            const long expected = n == 0 ? 0 : 2 * (n * n + n);
            if (c.degree() == expected && c.low_degree() >= 0) continue;
            r.lhs_sample = std::to_string(c.degree());
            r.rhs_sample = std::to_string(expected);
        } catch (const std::domain_error& e) {
            r.note = e.what();
        }
        r.pass = false;
        r.first_failure_degree = n;
        break;
    }
    return r;
}

IdentityResult check_punctual_power_relation(long order) {
    return compare_series("z_punctual_c3 ^ (L^3) = z_c3 product",
                          z_power_class(z_punctual_c3(order).series, lefschetz(3)),
                          z_c3_product(order).series);
}

VerifyReport plethysm_property_suite(int cases, long max_order, unsigned long seed) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.suite = "plethysm";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> order_dist(4, max_order);
    std::uniform_int_distribution<long> shift_pick(0, 4);
    constexpr long shift_values[5] = {-2, -1, 1, 2, 3};

    for (int c = 0; c < cases; ++c) {
        const long order = order_dist(rng);
        IdentityResult res;
        res.order = order;
        res.pass = true;
        switch (c % 5) {
            case 0: {
                const auto a = random_exp_argument(rng, order);
                const auto back = reduce_to_mot(log_pleth(exp_pleth(a)),
                                                "log of integral series not integral");
                res.name = "Exp/Log roundtrip #" + std::to_string(c);
                res.pass = back == a;
                break;
            }
            case 1: {
                const auto a = random_exp_argument(rng, order);
                const auto b = random_exp_argument(rng, order);
                res.name = "Exp additivity #" + std::to_string(c);
                res.pass = exp_pleth(a + b) == exp_pleth(a) * exp_pleth(b);
                break;
            }
            case 2: {
                const auto a = random_exp_argument(rng, order);
                res.name = "Exp two-route agreement #" + std::to_string(c);
                res.pass = exp_pleth(a) == exp_pleth_adams(a);
                break;
            }
            case 3: {
                const auto a = random_exp_argument(rng, order);
                const long n = shift_values[shift_pick(rng)];
                const MotWeight un = MotWeight::monomial(n, 1);
                res.name = "Exp substitution rule t -> u^" + std::to_string(n) + " t #" +
                           std::to_string(c);
                res.pass = ts_rescale(exp_pleth(a), 1, un) == exp_pleth(ts_rescale(a, 1, un));
                break;
            }
            default: {
                auto f = random_exp_argument(rng, order);
                f[0] = MotWeight::one();
                const MotWeight x = random_mot_weight(rng, 2, 3, 5);
                const MotWeight y = random_mot_weight(rng, 2, 3, 5);
                std::uniform_int_distribution<long> mono_exp(-3, 3);
                const MotWeight mono = MotWeight::monomial(mono_exp(rng), 1);
                res.name = "power-structure laws #" + std::to_string(c);
                res.pass = pow_class(f, x + y) == pow_class(f, x) * pow_class(f, y) &&
                           pow_class(f, x * mono) == pow_class(pow_class(f, x), mono);
                if (res.pass) {
                    auto g = random_exp_argument(rng, order);
                    g[0] = MotWeight::one();
                    res.pass = pow_class(f * g, x) == pow_class(f, x) * pow_class(g, x);
                }
                if (res.pass) {
                    // (1-t)^(-u^n [X]) = (1 - u^n t)^(-[X])
                    TruncSeries<MotWeight> one_minus_t(order);
                    one_minus_t[0] = MotWeight::one();
                    one_minus_t[1] = MotWeight::constant(-1);
                    TruncSeries<MotWeight> twisted(order);
                    twisted[0] = MotWeight::one();
                    twisted[1] = -mono;
                    res.pass = pow_class(one_minus_t, -(mono * x)) == pow_class(twisted, -x);
                }
                break;
            }
        }
        rep.identities.push_back(std::move(res));
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                           .count();
    return rep;
}

std::vector<std::string> suite_names() {
    return {"all", "flagship", "plethysm", "feitfine", "refined", "guess"};
}

VerifyReport run_suite(const std::string& suite, long order, int threads) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.suite = suite;
    auto add = [&rep](IdentityResult r) { rep.identities.push_back(std::move(r)); };

    const bool all = suite == "all";
    if (all || suite == "flagship") {
        add(check_recursion_vs_product(order));
        add(check_twisted_quotient(order));
    }
    if (all || suite == "feitfine") {
        add(check_double_product_vs_expansion(order, -80));
        add(check_commuting_class_degrees(order));
    }
    if (all || suite == "refined") {
        for (long td : {-3, -2, -1, 0, 1, 2, 3})
            add(check_refined_macmahon_vs_sum(td, std::min(order, 10L)));
        add(check_refined_specialization(order, threads));
        add(check_euler_signed_macmahon(order, threads));
    }
    if (all || suite == "guess") {
        add(check_guess_agreement(2, order, threads));
        add(check_guess_agreement(3, order, threads));
        add(check_guess_failure_dim4(std::min(order, 8L), threads));
    }
    if (all) {
        add(check_zx_cross_route("0", MotWeight{}, order));
        add(check_zx_cross_route("1", MotWeight::one(), order));
        add(check_zx_cross_route("1+L", MotWeight::one() + lefschetz(1), order));
        add(check_zx_cross_route("L^3", lefschetz(3), order));
        add(check_zx_cross_route("[P^3]", BettiVector::projective_space_3().tate_class(),
                                 order));
        add(check_punctual_power_relation(order));
        add(check_weight_vs_betti_p3(order));
        add(check_weight_vs_betti("[P^1 x P^2]", BettiVector{{1, 0, 2, 0, 2, 0, 1}}, order));
        add(check_dim0_points(2, order));
        add(check_dim0_points(5, order));
        add(check_dim1_p1(order));
        add(check_dim2_goettsche(order, threads));
        for (long d : {4L, 5L, 6L}) add(check_cheah_extension(d));
    }
    if (all || suite == "plethysm") {
        VerifyReport pleth = plethysm_property_suite(all ? 60 : 200, std::min(order, 10L));
        for (auto& id : pleth.identities) rep.identities.push_back(std::move(id));
    }
    if (rep.identities.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                           .count();
    return rep;
}

}  // namespace mdt
