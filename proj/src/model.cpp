#include "extopt/model.hpp"

#include <string>
#include <utility>

namespace extopt {

Instance::Instance(int n, Rational x, Rational w)
    : n_(n), x_(std::move(x)), w_(std::move(w)) {
  if (n_ < 1) throw InputError("n must be at least 1");
  if (x_ <= 0) throw InputError("x must be positive");
  if (w_ <= 0) throw InputError("w must be positive");
  if (w_ >= n_ * x_) {
    throw TrivialRegimeError("w >= n*x: every interval can be covered, the problem is trivial");
  }
  m_ = static_cast<int>(floor_to_int(w_ / x_));
  r_ = w_ - m_ * x_;
  y_ = x_ - r_;
}

void QueueParams::validate() const {
  if (lambda < 0) throw InputError("lambda must be nonnegative");
  if (mu1 <= 0) throw InputError("mu1 must be positive");
  if (mu2 < mu1 * mu1) throw InputError("mu2 must be at least mu1^2");
  if (rho() >= 1) {
    throw StabilityError("unstable queue: rho = " + to_string(rho()) + " >= 1");
  }
}

Rational externality_mean(const QueueParams& q, int n, const Rational& x) {
  q.validate();
  if (n < 1) throw InputError("n must be at least 1");
  if (x <= 0) throw InputError("x must be positive");
  return Rational(n * x / (1 - q.rho()));
}

Rational externality_variance(const QueueParams& q, const ServiceVector& v,
                              const Rational& x) {
  q.validate();
  const Rational strict = strict_interval_sum(v, x);
  const Rational slack = 1 - q.rho();
  const Rational scale = q.lambda * q.mu2 / (slack * slack * slack);
  return Rational(scale * (static_cast<long>(v.size()) * x + 2 * strict));
}

ServiceVector supremum_vector(const Instance& inst) {
  ServiceVector v(static_cast<std::size_t>(inst.n()), Rational(0));
  v.front() = inst.w();
  return v;
}

Rational vector_sum(const ServiceVector& v) {
  Rational total = 0;
  for (const Rational& vi : v) total += vi;
  return total;
}

}  // namespace extopt
