#ifndef CLC_TESTS_UTIL_HPP
#define CLC_TESTS_UTIL_HPP

#include "clc/curve.hpp"
#include "clc/serialize.hpp"

namespace clc_test {

inline clc::PlaneCurve norm_trace_curve(uint64_t q, int r) {
    auto [p, s] = clc::factor_prime_power(q);
    clc::Field f = clc::make_field(p, s * r, clc::Tower{s, r});
    return clc::PlaneCurve::norm_trace(f);
}

/// y^8 + y = x^3 over F_64 (all signs coincide in characteristic 2).
inline clc::PlaneCurve schmidt_curve() {
    clc::Field f = clc::make_field(2, 6, clc::Tower{1, 6});
    clc::BiPoly eq(f.get());
    eq.set_term(0, 8, 1);
    eq.set_term(0, 1, 1);
    eq.set_term(3, 0, 1);
    return clc::PlaneCurve::custom(f, std::move(eq));
}

}  // namespace clc_test

#endif
