#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdt/dtgen.hpp"

namespace mdt {

struct IdentityResult {
    std::string name;
    long order = 0;
    bool pass = false;
    std::optional<long> first_failure_degree;
    std::string lhs_sample;
    std::string rhs_sample;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::vector<IdentityResult> identities;
    double wall_seconds = 0.0;

    bool pass() const {
        for (const auto& id : identities)
            if (!id.pass) return false;
        return true;
    }
};

// Individual exact identity checks.  Each runs at the given truncation order
// (clamped to enumeration ceilings where brute force is involved) and reports
// the first failing degree on mismatch.
IdentityResult check_recursion_vs_product(long order);
IdentityResult check_twisted_quotient(long order);
IdentityResult check_euler_signed_macmahon(long order, int threads = 1);
IdentityResult check_zx_cross_route(const std::string& label, const MotWeight& x, long order);
IdentityResult check_weight_vs_betti(const std::string& label, const BettiVector& b,
                                     long order);
IdentityResult check_weight_vs_betti_p3(long order);
IdentityResult check_dim0_points(long n_points, long order);
IdentityResult check_dim1_p1(long order);
IdentityResult check_dim2_goettsche(long order, int threads = 1);
IdentityResult check_cheah_extension(long d);
IdentityResult check_refined_macmahon_vs_sum(long two_delta, long order);
IdentityResult check_refined_specialization(long order, int threads = 1);
IdentityResult check_guess_agreement(long d, long order, int threads = 1);
IdentityResult check_guess_failure_dim4(long order, int threads = 1);
IdentityResult check_double_product_vs_expansion(long order, long floor);
IdentityResult check_commuting_class_degrees(long order);
IdentityResult check_punctual_power_relation(long order);

// Randomized plethysm property suite: Exp/Log roundtrips, Exp additivity,
// agreement of the two Exp algorithms, the substitution rule t -> u^n t and
// the power-structure laws; `cases` property instances, orders <= max_order.
VerifyReport plethysm_property_suite(int cases, long max_order, unsigned long seed = 20110613);

// Named suites exposed by the command line: all, flagship, plethysm,
// feitfine, refined, guess.
VerifyReport run_suite(const std::string& suite, long order, int threads = 1);

std::vector<std::string> suite_names();

}  // namespace mdt
