#pragma once

#include "mdt/series.hpp"

namespace mdt {

// Plethystic exponential Exp(sum A_n t^n) = prod (1 - t^n)^(-A_n), realized
// on truncated series.  Two independent algorithms are provided and must
// agree:
//
//  * the monomial-product route, valid for polynomial coefficients, expands
//    (1 - t^n)^(-c u^i) = (1 - u^i t^n)^(-c) term by term;
//  * the exp/Adams route computes exp(sum_k psi_k(A)(t^k)/k) with rational
//    scalars and works over fractional coefficients as well.
//
// Arguments must have zero constant term.
TruncSeries<MotWeight> exp_pleth(const TruncSeries<MotWeight>& a);
TruncSeries<MotWeight> exp_pleth_adams(const TruncSeries<MotWeight>& a);
TruncSeries<RatWeight> exp_pleth(const TruncSeries<RatWeight>& a);

// Plethystic logarithm, the two-sided inverse of Exp on series with constant
// term 1, via Moebius inversion: sum_k (mu(k)/k) psi_k(log f)(t^k).
TruncSeries<RatWeight> log_pleth(const TruncSeries<RatWeight>& f);
TruncSeries<RatWeight> log_pleth(const TruncSeries<MotWeight>& f);

// Power structure f^x = Exp(x * Log f) for a motivic exponent; the result of
// a polynomial-coefficient base is again polynomial.
TruncSeries<MotWeight> pow_class(const TruncSeries<MotWeight>& f, const MotWeight& x);
TruncSeries<RatWeight> pow_class(const TruncSeries<RatWeight>& f, const RatWeight& x);

TruncSeries<RatWeight> lift_to_rat(const TruncSeries<MotWeight>& s);
TruncSeries<MotWeight> reduce_to_mot(const TruncSeries<RatWeight>& s, const char* error_message);

}  // namespace mdt
