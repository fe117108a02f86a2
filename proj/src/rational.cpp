#include "extopt/rational.hpp"

#include <cctype>
#include <cmath>

#include "extopt/errors.hpp"

namespace extopt {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw InputError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt q{std::string(den), 10};
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt{std::string(num), 10}, q);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
    result = Rational(digits, scale);
    result.canonicalize();
  } else {
    if (!all_digits(body)) bad_number(text);
    result = Rational(BigInt{std::string(body), 10});
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::int64_t floor_to_int(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InputError("integer part out of range");
  return q.get_si();
}

std::int64_t ceil_to_int(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InputError("integer part out of range");
  return q.get_si();
}

Rational rationalize(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw InputError("cannot rationalize a non-finite value");
  if (max_denominator < 1) throw InputError("max_denominator must be positive");
  Rational exact(value);
  const BigInt limit(static_cast<long>(max_denominator));

  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = exact;
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > limit) break;
    BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) return Rational(p1, q1);
    rest = 1 / frac;
  }
  // Best semiconvergent against the last convergent.
  BigInt k = (limit - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(semi - exact) < abs(conv - exact) ? semi : conv;
}

}  // namespace extopt
