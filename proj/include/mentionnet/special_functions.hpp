#pragma once

namespace mentionnet::special {

// sum_{k>=0} (q + k)^-s exp(-lambda (q + k)) for q > 0, lambda >= 0.
// A short direct sum is followed by an Euler-Maclaurin tail whose correction
// series stops once the next term falls below 1e-16 of the running total,
// far inside the 1e-12 remainder budget. With lambda == 0 this is the Hurwitz
// zeta function and requires s > 1; otherwise +inf is returned.
double truncated_zeta(double s, double lambda, double q);

inline double hurwitz_zeta(double s, double q) { return truncated_zeta(s, 0.0, q); }

// ln P(Z > z) for a standard normal Z, accurate far into both tails.
double log_normal_upper_tail(double z);

}  // namespace mentionnet::special
