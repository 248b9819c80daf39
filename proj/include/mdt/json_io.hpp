#pragma once

#include <json.hpp>

#include "mdt/dtgen.hpp"
#include "mdt/laurent.hpp"
#include "mdt/rat_weight.hpp"
#include "mdt/series.hpp"

namespace mdt {

using json = nlohmann::json;

// Motivic weights serialize in the internal u-convention: pairs of
// [exponent in half-powers of L, coefficient as decimal string], descending,
// with an explicit convention tag.
inline json to_json(const MotWeight& x) {
    json terms = json::array();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.push_back(json::array({it->first, it->second.get_str()}));
    return json{{"convention", "u=-L^(1/2)"}, {"terms", terms}};
}

// Weight polynomials serialize in the q-convention: [exponent in half-powers
// of q, coefficient string] with the stored generator sign folded in.
inline json to_json(const WeightPoly& x) {
    json terms = json::array();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        Int c = (it->first % 2 == 0) ? it->second : Int(-it->second);
        terms.push_back(json::array({it->first, c.get_str()}));
    }
    return terms;
}

inline json to_json(const RatWeight& x) {
    return json{{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

inline json to_json(const Int& x) { return x.get_str(); }

template <class R>
json to_json(const TruncSeries<R>& s) {
    json coeffs = json::array();
    for (long n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s[n]));
    return json{{"variable", "t"}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const DegreeReport& r) {
    json j{{"identity", r.identity}, {"order", r.order}, {"status", r.pass() ? "pass" : "fail"}};
    if (r.first_failure) {
        j["first_failure_degree"] = *r.first_failure;
        j["lhs"] = r.lhs_sample;
        j["rhs"] = r.rhs_sample;
    }
    return j;
}

}  // namespace mdt
