// Tail probabilities for the regression significance columns.

#ifndef PARAMSORT_SPECIAL_FUNCTIONS_HPP
#define PARAMSORT_SPECIAL_FUNCTIONS_HPP

namespace paramsort {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
///
/// Evaluated with the modified Lentz continued fraction; for
/// x > (a + 1) / (a + b + 2) the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) is used so
/// the fraction converges quickly. Absolute error is below 1e-10 in practice.
/// Throws std::invalid_argument outside the domain.
double regularized_incomplete_beta(double a, double b, double x);

/// 2 P(T_df > |t|) = I_{df/(df+t^2)}(df/2, 1/2). Throws for df < 1.
double student_t_two_sided_sig(double t, int df);

/// P(F_{df1,df2} > f) = I_{df2/(df2+df1 f)}(df2/2, df1/2). Throws for f < 0 or
/// df < 1.
double f_sig(double f, int df1, int df2);

}  // namespace paramsort

#endif  // PARAMSORT_SPECIAL_FUNCTIONS_HPP
