#pragma once

#include <array>

#include "mdt/laurent.hpp"
#include "mdt/series.hpp"

namespace mdt {

// prod_{k=1}^{n} (L^k - 1); empty product for n = 0.
MotWeight class_lfact(long n);

// [GL_n] = L^binom(n,2) * class_lfact(n).
MotWeight class_gl(long n);

// Class of the Grassmannian Gr(k, n): the Gaussian binomial, a polynomial in
// L reducing to binom(n, k) at L = 1.
MotWeight gaussian_binomial(long n, long k);

// [P^N]_vir = L^(-N/2) (L^(N+1) - 1)/(L - 1), defined for every integer N;
// in particular [P^-1]_vir = 0 and [P^-2]_vir = -1.
MotWeight proj_vir(long n);

// Multiplication by L^(-d/2): the virtual normalization of a smooth class of
// dimension d.
MotWeight vir_normalize(const MotWeight& x, long d);

// Weight-polynomial realization L^(1/2) -> q^(1/2); on the stored generators
// this is the identity on term data, so it is a ring homomorphism compatible
// with the power structures on both sides.
WeightPoly realize_weight(const MotWeight& x);
TruncSeries<WeightPoly> realize_weight(const TruncSeries<MotWeight>& s);

// E-polynomial realization, restricted to Tate classes where it only sees
// the product xy: E(L^n) = (xy)^n in half-integer powers.  Library-only, not
// part of the command-line surface.
struct HodgeProductTag {
    static constexpr const char* symbol = "(xy)";
};
using EPoly = Laurent<HodgeProductTag>;
EPoly realize_epoly(const MotWeight& x);

// Euler-characteristic realization: the exact value at u = 1, equivalently
// q^(1/2) = -1.
Int realize_euler(const MotWeight& x);
Int realize_euler(const WeightPoly& x);
TruncSeries<Int> realize_euler(const TruncSeries<MotWeight>& s);
TruncSeries<Int> realize_euler(const TruncSeries<WeightPoly>& s);

// Betti numbers b_0..b_6 of a smooth projective threefold.
struct BettiVector {
    std::array<long, 7> b{};

    long euler() const;
    bool has_odd_cohomology() const;

    // W([X]) = sum_d b_d q^(d/2).
    WeightPoly weight_class() const;

    // For Tate classes, [X] = sum_i b_{2i} L^i; throws when odd Betti
    // numbers are present.
    MotWeight tate_class() const;

    static BettiVector projective_space_3();
};

}  // namespace mdt
