#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdt/classes.hpp"
#include "mdt/plethysm.hpp"
#include "mdt/series.hpp"
#include "mdt/trunc_laurent.hpp"

namespace mdt {

enum class Route { product, recursion, exp_formula, power_formula, weight_product };

const char* route_name(Route r);

// A degree-zero Donaldson-Thomas partition function together with the route
// that produced it; the constant term is always 1.
struct ZSeries {
    Route route;
    TruncSeries<MotWeight> series;
};

// Generating series of the renormalized commuting-variety classes,
// C(t) = Exp(L^2/(L-1) * t/(1-t)); the t^n coefficient lives in
// M_C[(1-L^k)^{-1}].
TruncSeries<RatWeight> feit_fine_series(long order);

// The class [C_n] of pairs of commuting n x n matrices, recovered as
// c~_n * [GL_n]; always a polynomial of degree n^2 + n in L.
MotWeight commuting_class(long n, const TruncSeries<RatWeight>& feit_fine);

// Feit-Fine double product prod_{m>=1} prod_{j>=0} (1 - L^(1-j) t^m)^(-1)
// with each t^n coefficient expanded at L = infinity, exact above `floor`
// (u-units).  The j-range is cut off once omitted factors only affect
// exponents below the floor.
TruncSeries<TruncLaurent> feit_fine_double_product(long order, long floor);

// Z_{C^3}(t) = prod_{m>=1} prod_{k=0}^{m-1} (1 - L^(k+2-m/2) t^m)^(-1).
ZSeries z_c3_product(long order);

// The same series from the commuting-variety recursion
//   w_n = L^(n(n+1)) [C_n],
//   w_n^n = w_n - sum_{k<n} binom(n,k)_L L^((n-k)(n+2k)) [C_{n-k}] w_k^k,
//   [Hilb^n]_vir = L^(-3n^2/2) w_n^n / Lfact(n);
// every coefficient must reduce to denominator 1.
ZSeries z_c3_recursion(long order);

// Per-degree outcome of one exact series identity.
struct DegreeReport {
    std::string identity;
    long order = 0;
    std::vector<bool> degree_ok;
    std::optional<long> first_failure;
    std::string lhs_sample;
    std::string rhs_sample;

    bool pass() const { return !first_failure.has_value(); }
};

// C(t L^(1/2)) = Z_{C^3}(t) * C(t L^(-1/2)), checked exactly over
// fractional coefficients.
DegreeReport twisted_quotient_check(long order);

// Generating series of virtual motives of the punctual Hilbert schemes of
// C^3 at the origin; satisfies z_punctual_c3^(L^3) = z_c3_product.
ZSeries z_punctual_c3(long order);

// Z_X(t) for a threefold class x, by the motivic exponential formula
// Z_X(-t) = Exp(-t [X]_vir / ((1 + L^(1/2) t)(1 + L^(-1/2) t))).
ZSeries z_x_exp(const MotWeight& x, long order);

// Power structure applied in the -t chart: the virtual Z-series become
// plethystic exponentials only after t -> -t (the same sign that makes the
// Euler specialization the signed MacMahon function), so their powers are
// taken there and transported back.
TruncSeries<MotWeight> z_power_class(const TruncSeries<MotWeight>& f, const MotWeight& x);

// Z_X(t) as the power Z_{C^3,0}(t)^x; agrees with z_x_exp coefficientwise.
ZSeries z_x_power(const MotWeight& x, long order);

// Z_X(T) = Exp(T [X]_vir Exp(T [P^(d-2)]_vir)) with T = (-1)^d t, valid in
// dimensions 0..3 at any order; for d >= 4 only the smooth range n <= 3 is
// defined and larger orders are refused.
ZSeries unified_formula(long d, const MotWeight& x, long order);

// Goettsche's formula sum [Hilb^n(S)] t^n = Exp([S] t / (1 - L t)),
// unnormalized ordinary classes.
TruncSeries<MotWeight> goettsche_surface(const MotWeight& s, long order);

// Punctual Hilbert scheme classes of C^d up to three points:
// 1 + t + binom(d,1)_L t^2 + binom(d+1,2)_L t^3.
TruncSeries<MotWeight> cheah_low(long d);

// W Z_X(t) = prod_{d=0}^{6} M_{(d-3)/2}(-t, -q^(1/2))^((-1)^d b_d).
TruncSeries<WeightPoly> weight_partition_function(const BettiVector& b, long order);

// Refined MacMahon function M_delta(t, q^(1/2)) =
// prod_{m>=1} prod_{k=0}^{m-1} (1 - q^(delta+1/2+k-m/2) t^m)^(-1),
// delta = two_delta/2.
TruncSeries<WeightPoly> refined_macmahon(long two_delta, long order);

// MacMahon function M(t) = prod (1-t^m)^(-m).
TruncSeries<Int> macmahon_series(long order);

// MacMahon's guessed product prod (1-t^m)^(-binom(m+d-3, d-2)) for
// d-dimensional partitions; exact for d <= 3 and n <= 3 only.
TruncSeries<Int> macmahon_guess(long d, long order);

// Comparison of the guess against brute-force enumeration; the mismatch
// degree is discovered, never asserted.
struct GuessComparison {
    long dim = 0;
    long order = 0;
    std::vector<Int> guess;
    std::vector<Int> counted;
    std::optional<long> first_mismatch;
};

GuessComparison compare_guess(long d, long order, int threads = 1);

}  // namespace mdt
