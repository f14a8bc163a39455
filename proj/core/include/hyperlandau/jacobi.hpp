#ifndef HYPERLANDAU_JACOBI_HPP
#define HYPERLANDAU_JACOBI_HPP

namespace hyperlandau {

/// P_n^{(a,b)}(w) by the forward three-term recurrence in n. Valid for any
/// real a, b, w; when a recurrence denominator vanishes (possible for
/// non-classical parameters) the explicit binomial sum is used instead.
double jacobi_eval(int n, double a, double b, double w);

/// Sign and log-magnitude of P_n^{(a,b)}(w) for w >= 1, with the argument
/// passed as log w. Runs the recurrence on P_k / w^k, so arguments far
/// beyond the double range (w = cosh u at large u) stay finite.
struct LogJacobi {
  double log_abs;  ///< log |P_n(w)|, -inf when the value is zero
  int sign;        ///< -1, 0 or +1
};
LogJacobi jacobi_log_eval(int n, double a, double b, double log_w);

/// d/dw P_n^{(a,b)}(w) = (n + a + b + 1) / 2 * P_{n-1}^{(a+1,b+1)}(w).
double jacobi_derivative(int n, double a, double b, double w);

}  // namespace hyperlandau

#endif  // HYPERLANDAU_JACOBI_HPP
