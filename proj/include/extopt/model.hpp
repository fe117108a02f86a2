#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "extopt/errors.hpp"
#include "extopt/rational.hpp"

namespace extopt {

using ServiceVector = std::vector<Rational>;

// Problem parameters: n waiting customers, tagged demand x, mass budget w
// with 0 < w < n*x. Derived: m = floor(w/x), r = w - m*x, y = x - r.
class Instance {
 public:
  // Throws InputError on n < 1, x <= 0, w <= 0 and TrivialRegimeError on
  // w >= n*x.
  Instance(int n, Rational x, Rational w);

  int n() const { return n_; }
  const Rational& x() const { return x_; }
  const Rational& w() const { return w_; }
  int m() const { return m_; }
  const Rational& r() const { return r_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_;
  Rational x_;
  Rational w_;
  int m_;
  Rational r_;
  Rational y_;
};

// Poisson arrivals at rate lambda, service demand with mean mu1 and
// second moment mu2.
struct QueueParams {
  Rational lambda;
  Rational mu1;
  Rational mu2;

  Rational rho() const { return lambda * mu1; }

  // lambda >= 0, mu1 > 0, mu2 >= mu1^2 (InputError); rho < 1
  // (StabilityError).
  void validate() const;
};

namespace detail {
template <class Scalar>
void check_objective_args(std::span<const Scalar> v, const Scalar& x) {
  if (v.empty()) throw InputError("service vector must be non-empty");
  if (!(x > 0)) throw InputError("x must be positive");
  for (const Scalar& vi : v) {
    if (vi < 0) throw InputError("service vector entries must be nonnegative");
  }
}

template <class Scalar>
std::vector<Scalar> prefix_sums(std::span<const Scalar> v) {
  std::vector<Scalar> prefix(v.size() + 1, Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i];
  return prefix;
}
}  // namespace detail

/// Sum over all index intervals [k, l], k <= l, of (x - sum_{k..l} v)^+.
///
/// Interval sums come from a prefix-sum table, so the cost is n(n+1)/2
/// constant-size evaluations.
template <class Scalar>
Scalar eval_f(std::span<const Scalar> v, const Scalar& x) {
  detail::check_objective_args(v, x);
  const std::vector<Scalar> prefix = detail::prefix_sums(v);
  const std::size_t n = v.size();
  Scalar total(0);
  Scalar shortfall(0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      shortfall = x - (prefix[l + 1] - prefix[k]);
      if (shortfall > 0) total += shortfall;
    }
  }
  return total;
}

/// Row j of the triangle: the n+1-j intervals of exactly j consecutive
/// indices. Requires 1 <= j <= n.
template <class Scalar>
Scalar eval_f_row(std::span<const Scalar> v, const Scalar& x, int j) {
  detail::check_objective_args(v, x);
  const auto n = static_cast<int>(v.size());
  if (j < 1 || j > n) throw InputError("row index out of range [1, n]");
  const std::vector<Scalar> prefix = detail::prefix_sums(v);
  Scalar total(0);
  Scalar shortfall(0);
  for (int k = 0; k + j <= n; ++k) {
    shortfall = x - (prefix[k + j] - prefix[k]);
    if (shortfall > 0) total += shortfall;
  }
  return total;
}

/// Off-diagonal part of eval_f: intervals with k < l only.
template <class Scalar>
Scalar strict_interval_sum(std::span<const Scalar> v, const Scalar& x) {
  detail::check_objective_args(v, x);
  const std::vector<Scalar> prefix = detail::prefix_sums(v);
  const std::size_t n = v.size();
  Scalar total(0);
  Scalar shortfall(0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      shortfall = x - (prefix[l + 1] - prefix[k]);
      if (shortfall > 0) total += shortfall;
    }
  }
  return total;
}

inline Rational eval_f(const ServiceVector& v, const Rational& x) {
  return eval_f(std::span<const Rational>(v), x);
}
inline Rational eval_f_row(const ServiceVector& v, const Rational& x, int j) {
  return eval_f_row(std::span<const Rational>(v), x, j);
}
inline Rational strict_interval_sum(const ServiceVector& v, const Rational& x) {
  return strict_interval_sum(std::span<const Rational>(v), x);
}

// E[externalities] = n x / (1 - rho).
Rational externality_mean(const QueueParams& q, int n, const Rational& x);

// Var[externalities] = lambda mu2 / (1 - rho)^3 * (n x + 2 S), S the strict
// interval sum of v.
Rational externality_variance(const QueueParams& q, const ServiceVector& v,
                              const Rational& x);

// (w, 0, ..., 0): the placement attaining the supremum of f over the set.
ServiceVector supremum_vector(const Instance& inst);

Rational vector_sum(const ServiceVector& v);

}  // namespace extopt
