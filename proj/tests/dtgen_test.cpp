#include <doctest.h>

#include "mdt/dtgen.hpp"
#include "mdt/partitions.hpp"

using namespace mdt;

namespace {

// q^(1/2) -> -q^(1/2) on weight polynomials, i.e. the stored generator goes
// to its negative.
WeightPoly flip_q_half(const WeightPoly& w) {
    WeightPoly r;
    for (const auto& [e, c] : w.terms())
        r += WeightPoly::monomial(e, (e % 2 == 0) ? c : Int(-c));
    return r;
}

// value at q^(1/2) = 1, i.e. stored generator = -1.
Int at_q_half_one(const WeightPoly& w) {
    Int acc = 0;
    for (const auto& [e, c] : w.terms()) acc += (e % 2 == 0) ? c : Int(-c);
    return acc;
}

const MotWeight kOne = MotWeight::one();

}  // namespace

TEST_CASE("Feit-Fine series") {
    const auto ff = feit_fine_series(6);
    CHECK(ff[0] == RatWeight::one());
    CHECK(ff[1] == rf_reduce(lefschetz(2), lefschetz(1) - kOne));

    // [C_2] = c~_2 [GL_2] is a polynomial of degree n^2 + n = 6 in L
    const MotWeight c2 = commuting_class(2, ff);
    CHECK(c2.degree() == 12);
    CHECK(c2.low_degree() >= 0);
    for (long n = 0; n <= 6; ++n) {
        const MotWeight cn = commuting_class(n, ff);
        CHECK(cn.degree() == 2 * (n * n + n));
    }
}

TEST_CASE("Feit-Fine double product matches the expansions of the fractions") {
    const long floor = -30;
    const auto dp = feit_fine_double_product(6, floor);
    const auto ff = feit_fine_series(6);
    CHECK(dp[0].coeff(0) == 1);
    // t^1: L + 1 + L^-1 + ...
    CHECK(dp[1].coeff(2) == 1);
    CHECK(dp[1].coeff(0) == 1);
    CHECK(dp[1].coeff(-2) == 1);
    CHECK(dp[1].coeff(-1) == 0);
    for (long n = 0; n <= 6; ++n)
        CHECK(dp[n].agrees_with(expand_at_infinity(ff[n], floor), floor));
}

TEST_CASE("partition function of affine 3-space, product route") {
    const ZSeries z = z_c3_product(8);
    CHECK(z.route == Route::product);
    CHECK(z.series[0] == kOne);
    CHECK(z.series[1] == lefschetz_half(3));
    CHECK(z.series[2] == lefschetz(3) + lefschetz(2) + lefschetz(1));

    // signed MacMahon under the Euler realization, against enumeration
    const auto euler = realize_euler(z.series);
    const auto counts = count_dpartitions_upto(3, 8);
    for (long n = 0; n <= 8; ++n) {
        const Int expected = (n % 2 == 0) ? counts[static_cast<std::size_t>(n)]
                                          : Int(-counts[static_cast<std::size_t>(n)]);
        CHECK(euler[n] == expected);
    }
}

TEST_CASE("recursion route agrees with the product route") {
    const ZSeries rec = z_c3_recursion(6);
    CHECK(rec.route == Route::recursion);
    CHECK(rec.series[1] == lefschetz_half(3));  // w_1^1 = L^4 - L^3 normalized
    CHECK(rec.series == z_c3_product(6).series);
}

TEST_CASE("twisted quotient identity") {
    const DegreeReport trivial = twisted_quotient_check(0);
    CHECK(trivial.pass());
    const DegreeReport small = twisted_quotient_check(1);
    CHECK(small.pass());
    const DegreeReport full = twisted_quotient_check(6);
    CHECK(full.pass());
    CHECK(full.degree_ok.size() == 7);
}

TEST_CASE("punctual series") {
    const ZSeries z0 = z_punctual_c3(6);
    CHECK(z0.series[0] == kOne);
    CHECK(z0.series[1] == lefschetz_half(-3));
    // virtual punctual coefficients are L^(-3n/2) times the punctual classes
    // for n <= 3, via the smoothness of the Hilbert scheme there
    const auto low = cheah_low(3);
    for (long n = 0; n <= 3; ++n)
        CHECK(z0.series[n] == lefschetz_half(-3 * n) * low[n]);
    // the power relation recovers the full partition function
    CHECK(z_power_class(z0.series, lefschetz(3)) == z_c3_product(6).series);
}

TEST_CASE("exp and power routes agree for threefold classes") {
    const MotWeight p3 = BettiVector::projective_space_3().tate_class();
    const std::vector<std::pair<const char*, MotWeight>> tests = {
        {"0", MotWeight{}},
        {"1", kOne},
        {"1+L", kOne + lefschetz(1)},
        {"L^3", lefschetz(3)},
        {"[P^3]", p3},
    };
    for (const auto& [label, x] : tests) {
        const ZSeries e = z_x_exp(x, 6);
        const ZSeries p = z_x_power(x, 6);
        CHECK(e.route == Route::exp_formula);
        CHECK(p.route == Route::power_formula);
        CHECK(e.series == p.series);
    }
    CHECK(z_x_exp(MotWeight{}, 6).series == TruncSeries<MotWeight>::unit(6));
    CHECK(z_x_exp(lefschetz(3), 6).series == z_c3_product(6).series);
}

TEST_CASE("euler specialization of the threefold series") {
    const MotWeight p3 = BettiVector::projective_space_3().tate_class();
    const auto euler = realize_euler(z_x_exp(p3, 10).series);
    CHECK(euler[1] == -4);
    const auto m_minus_t = ts_rescale(macmahon_series(10), 1, Int(-1));
    const auto expected = ts_pow_int(m_minus_t, 4);
    for (long n = 0; n <= 10; ++n) CHECK(euler[n] == expected[n]);
}

TEST_CASE("unified formula in low dimensions") {
    // d = 0: a collection of N points gives (1+t)^N
    const ZSeries pts = unified_formula(0, MotWeight::constant(2), 4);
    CHECK(pts.series[0] == kOne);
    CHECK(pts.series[1] == MotWeight::constant(2));
    CHECK(pts.series[2] == kOne);
    CHECK(pts.series[3] == MotWeight{});
    CHECK(pts.series[4] == MotWeight{});

    // d = 1: Sym^2 P^1 = P^2 normalized by L^(-n/2)
    const ZSeries curve = unified_formula(1, kOne + lefschetz(1), 5);
    CHECK(curve.series[2] == lefschetz(-1) * (kOne + lefschetz(1) + lefschetz(2)));

    // d = 2: Goettsche normalized by L^(-n)
    const ZSeries surf = unified_formula(2, lefschetz(2), 8);
    const auto goe = goettsche_surface(lefschetz(2), 8);
    for (long n = 0; n <= 8; ++n) CHECK(surf.series[n] == goe[n] * lefschetz(-n));

    // d = 3 reduces to the affine-3-space product for x = L^3
    CHECK(unified_formula(3, lefschetz(3), 6).series == z_c3_product(6).series);

    CHECK_THROWS_AS((void)unified_formula(-1, kOne, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)unified_formula(4, lefschetz(4), 8), std::domain_error);
}

TEST_CASE("Goettsche surface formula") {
    const auto plane = goettsche_surface(lefschetz(2), 10);
    CHECK(plane[2] == lefschetz(4) + lefschetz(3));
    CHECK(goettsche_surface(MotWeight{}, 5) == TruncSeries<MotWeight>::unit(5));

    // Euler values count ordinary partitions
    const auto euler = realize_euler(plane);
    const auto counts = count_dpartitions_upto(2, 10);
    for (long n = 0; n <= 10; ++n) CHECK(euler[n] == counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("punctual classes up to three points") {
    const auto d1 = cheah_low(1);
    for (long n = 0; n <= 3; ++n) CHECK(d1[n] == kOne);

    const auto d3 = cheah_low(3);
    CHECK(d3[0] == kOne);
    CHECK(d3[1] == kOne);
    CHECK(d3[2] == kOne + lefschetz(1) + lefschetz(2));
    CHECK(d3[3] == gaussian_binomial(4, 2));

    // the order-3 extension of the unified formula matches the smooth-range
    // assembly in higher dimensions
    for (long d : {4L, 5L, 6L}) {
        const ZSeries ext = unified_formula(d, lefschetz(d), 3);
        const auto assembled =
            ts_rescale(pow_class(cheah_low(d), lefschetz(d)), 1, lefschetz_half(-d));
        CHECK(ext.series == assembled);
    }
}

TEST_CASE("refined MacMahon functions") {
    for (long td : {-3L, -2L, -1L, 0L, 1L, 2L, 3L}) {
        const auto m = refined_macmahon(td, 4);
        CHECK(m[0] == WeightPoly::one());
        CHECK(m[1] == q_half_power(td));  // single factor m=1, k=0
    }
    const auto m0 = refined_macmahon(0, 6);
    CHECK(m0[2] == WeightPoly::one() + q_half_power(1) + q_half_power(-1));

    // q^(1/2) = 1 specialization is the MacMahon function
    const auto m = macmahon_series(6);
    for (long td : {-3L, 0L, 1L}) {
        const auto r = refined_macmahon(td, 6);
        for (long n = 0; n <= 6; ++n) CHECK(at_q_half_one(r[n]) == m[n]);
    }
    CHECK(m[0] == 1);
    CHECK(m[1] == 1);
    CHECK(m[2] == 3);
    CHECK(m[3] == 6);

    // product form equals the statistics sum
    for (long td : {-3L, -1L, 0L, 2L}) CHECK(refined_macmahon(td, 7) == refined_sum(7, td));
}

TEST_CASE("weight partition function") {
    // a single even Betti number gives one refined MacMahon factor at -t, -q^(1/2)
    const auto single = weight_partition_function(BettiVector{{1, 0, 0, 0, 0, 0, 0}}, 6);
    const auto transformed = ts_rescale(refined_macmahon(-3, 6), 1, WeightPoly::constant(-1));
    for (long n = 0; n <= 6; ++n) CHECK(single[n] == flip_q_half(transformed[n]));

    const BettiVector p3 = BettiVector::projective_space_3();
    const auto wz = weight_partition_function(p3, 8);
    WeightPoly t1;
    for (long i = 0; i <= 3; ++i) t1 += q_half_power(2 * i - 3);
    CHECK(wz[1] == t1);  // q^(-3/2)(1 + q + q^2 + q^3)

    // agreement with the weight realization of the motivic route
    CHECK(wz == realize_weight(z_x_exp(p3.tate_class(), 8).series));

    // q^(1/2) = -1 gives M(-t)^chi; chi(P^3) = 4
    const auto signed_m = ts_pow_int(ts_rescale(macmahon_series(8), 1, Int(-1)), p3.euler());
    for (long n = 0; n <= 8; ++n) CHECK(realize_euler(wz[n]) == signed_m[n]);

    // odd cohomology is fine on the weight side; its Euler shadow is the
    // MacMahon power of the signed Betti sum
    const BettiVector withOdd{{1, 2, 0, 0, 0, 0, 0}};
    const auto odd = weight_partition_function(withOdd, 6);
    CHECK(odd[0] == WeightPoly::one());
    const auto chi_power =
        ts_pow_int(ts_rescale(macmahon_series(6), 1, Int(-1)), withOdd.euler());
    for (long n = 0; n <= 6; ++n) CHECK(realize_euler(odd[n]) == chi_power[n]);
}

TEST_CASE("MacMahon's guess") {
    // d = 2: ordinary partitions
    const GuessComparison d2 = compare_guess(2, 10);
    CHECK_FALSE(d2.first_mismatch.has_value());

    // d = 3: plane partitions, exact at every order
    const GuessComparison d3 = compare_guess(3, 10);
    CHECK_FALSE(d3.first_mismatch.has_value());

    // d = 4: the guess fails at some discovered degree > 3
    const GuessComparison d4 = compare_guess(4, 8);
    REQUIRE(d4.first_mismatch.has_value());
    CHECK(*d4.first_mismatch > 3);
    const auto n = static_cast<std::size_t>(*d4.first_mismatch);
    CHECK(d4.guess[n] != d4.counted[n]);
    // both disagreeing values are reported
    CHECK(d4.guess[n] > 0);
    CHECK(d4.counted[n] > 0);

    CHECK_THROWS_AS((void)macmahon_guess(1, 4), std::invalid_argument);
}

TEST_CASE("route names") {
    CHECK(std::string(route_name(Route::product)) == "product");
    CHECK(std::string(route_name(Route::recursion)) == "recursion");
    CHECK(std::string(route_name(Route::weight_product)) == "weight_product");
}

TEST_CASE("polynomiality violations are reported, not regularized") {
    // a doctored linear coefficient whose product with [GL_1] stays fractional
    TruncSeries<RatWeight> fake(1);
    fake[0] = RatWeight::one();
    fake[1] = rf_reduce(MotWeight::one(), lefschetz(2) - MotWeight::one());
    CHECK_THROWS_WITH((void)commuting_class(1, fake), "recursion polynomiality violated");
}

TEST_CASE("Log of the flipped partition function is the exponential argument") {
    // Log(Z_{C^3}(-t)) = -L^(3/2) t / ((1 + L^(1/2) t)(1 + L^(-1/2) t))
    const auto flipped = ts_rescale(z_c3_product(8).series, 1, MotWeight::constant(-1));
    const auto lhs = reduce_to_mot(log_pleth(flipped), "log not integral");

    TruncSeries<MotWeight> den(8);
    den[0] = MotWeight::one();
    den[1] = -(MotWeight::monomial(1, 1) + MotWeight::monomial(-1, 1));
    den[2] = MotWeight::one();
    const auto inv = ts_inv(den);
    TruncSeries<MotWeight> rhs(8);
    for (long n = 1; n <= 8; ++n) rhs[n] = MotWeight::monomial(3, 1) * inv[n - 1];
    CHECK(lhs == rhs);
}

TEST_CASE("euler specialization is a MacMahon power for every test class") {
    const auto m_minus_t = ts_rescale(macmahon_series(12), 1, Int(-1));
    const std::vector<MotWeight> classes = {
        MotWeight{}, MotWeight::one(), MotWeight::one() + lefschetz(1), lefschetz(3),
        BettiVector::projective_space_3().tate_class()};
    for (const auto& x : classes) {
        const long chi = realize_euler(x).get_si();
        const auto lhs = realize_euler(z_x_exp(x, 12).series);
        const auto rhs = ts_pow_int(m_minus_t, chi);
        for (long n = 0; n <= 12; ++n) CHECK(lhs[n] == rhs[n]);
    }
}

TEST_CASE("weight product formula for a product threefold") {
    // P^1 x P^2 is Tate with Betti numbers (1,0,2,0,2,0,1)
    const BettiVector b{{1, 0, 2, 0, 2, 0, 1}};
    const MotWeight cls = (MotWeight::one() + lefschetz(1)) *
                          (MotWeight::one() + lefschetz(1) + lefschetz(2));
    CHECK(b.tate_class() == cls);
    CHECK(weight_partition_function(b, 8) == realize_weight(z_x_exp(cls, 8).series));
}
