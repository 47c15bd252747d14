#pragma once

namespace ellcond {

double normal_pdf(double x);
double normal_cdf(double x);

/// Inverse of normal_cdf; accurate to ~1e-15 after Halley refinement.
/// Throws Error(ProbabilityOutOfRange) unless 0 < p < 1.
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// CDF and quantile of the classical Student-t distribution with nu > 0
/// degrees of freedom (standard scale, variance nu/(nu-2) when nu > 2).
double student_t_cdf(double t, double nu);
double student_t_pdf(double t, double nu);
double student_t_quantile(double p, double nu);

} // namespace ellcond
