#include "hyperlandau/jacobi.hpp"

#include <cmath>
#include <limits>

#include "hyperlandau/error.hpp"

namespace hyperlandau {

namespace {

// Generalized binomial coefficient C(x, k) for real x and integer k >= 0.
double binomial(double x, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= (x - k + j) / j;
  return r;
}

// sum_s C(n+a, n-s) C(n+b, s) xm^s xp^(n-s) with xm = (w-1)/2, xp = (w+1)/2,
// or both divided by w for the scaled form.
double binomial_sum(int n, double a, double b, double xm, double xp) {
  double sum = 0.0;
  for (int s = 0; s <= n; ++s)
    sum += binomial(n + a, n - s) * binomial(n + b, s) * std::pow(xm, s) * std::pow(xp, n - s);
  return sum;
}

struct Step {
  double denom;  // 2(k+1)(k+a+b+1)(2k+a+b)
  double lin;    // (2k+a+b+1)(2k+a+b+2)(2k+a+b)
  double cst;    // (2k+a+b+1)(a^2-b^2)
  double prev;   // 2(k+a)(k+b)(2k+a+b+2)
};

Step step(int k, double a, double b) {
  const double s = 2.0 * k + a + b;
  return {2.0 * (k + 1) * (k + a + b + 1.0) * s, (s + 1.0) * (s + 2.0) * s, (s + 1.0) * (a * a - b * b),
          2.0 * (k + a) * (k + b) * (s + 2.0)};
}

bool recurrence_degenerate(int n, double a, double b) {
  for (int k = 1; k < n; ++k)
    if (step(k, a, b).denom == 0.0) return true;
  return false;
}

double recurrence(int n, double a, double b, double w) {
  double p_prev = 1.0;
  double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (w - 1.0);
  for (int k = 1; k < n; ++k) {
    const Step c = step(k, a, b);
    const double next = ((c.lin * w + c.cst) * p - c.prev * p_prev) / c.denom;
    p_prev = p;
    p = next;
  }
  return p;
}

// Same recurrence on Q_k = P_k / w^k, parameterized by inv_w = 1/w in [0, 1].
double scaled_recurrence(int n, double a, double b, double inv_w) {
  double q_prev = 1.0;
  double q = (a + 1.0) * inv_w + 0.5 * (a + b + 2.0) * (1.0 - inv_w);
  for (int k = 1; k < n; ++k) {
    const Step c = step(k, a, b);
    const double next = ((c.lin + c.cst * inv_w) * q - c.prev * inv_w * inv_w * q_prev) / c.denom;
    q_prev = q;
    q = next;
  }
  return q;
}

}  // namespace

double jacobi_eval(int n, double a, double b, double w) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "Jacobi degree must be >= 0");
  if (n == 0) return 1.0;
  if (recurrence_degenerate(n, a, b)) return binomial_sum(n, a, b, 0.5 * (w - 1.0), 0.5 * (w + 1.0));
  return recurrence(n, a, b, w);
}

LogJacobi jacobi_log_eval(int n, double a, double b, double log_w) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "Jacobi degree must be >= 0");
  if (!(log_w >= 0.0)) throw Error(ErrorCode::DomainError, "scaled Jacobi evaluation needs w >= 1");
  if (n == 0) return {0.0, 1};
  const double inv_w = std::exp(-log_w);
  const double q = recurrence_degenerate(n, a, b)
                       ? binomial_sum(n, a, b, 0.5 * (1.0 - inv_w), 0.5 * (1.0 + inv_w))
                       : scaled_recurrence(n, a, b, inv_w);
  if (q == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(q)) + n * log_w, q > 0.0 ? 1 : -1};
}

double jacobi_derivative(int n, double a, double b, double w) {
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi_eval(n - 1, a + 1.0, b + 1.0, w);
}

}  // namespace hyperlandau
