#pragma once

#include "spindir/half_int.hpp"

namespace spindir {

// log(n!) with cached values.
double log_factorial(int n);

// Condon-Shortley Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> by Racah's
// closed-form alternating sum with log-factorial stabilization. Returns 0
// when M != m1 + m2 or the triangle rule fails; throws on invalid (j, m)
// pairs.
double cg_coefficient(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

}  // namespace spindir
