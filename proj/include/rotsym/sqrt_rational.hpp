#pragma once

#include <optional>
#include <string>

#include "rotsym/rational.hpp"

namespace rotsym {

/// Exact value of the form sign * sqrt(p/q), sign in {-1, 0, +1},
/// radicand >= 0 in lowest terms. Closed under multiplication, which is
/// all the Racah-formula structure of CG and 6-j symbols needs. Square
/// factors are left in the radicand; they are only pulled out by
/// try_demote, which keeps multiplication cheap.
class SqrtRational {
 public:
  SqrtRational() : sign_(0), rad_(0) {}

  /// sqrt(r); r must be >= 0.
  static SqrtRational sqrt_of(Rational r);
  /// Embeds q as sign(q) * sqrt(q^2).
  static SqrtRational from_rational(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return rad_; }
  bool is_zero() const { return sign_ == 0; }

  SqrtRational operator*(const SqrtRational& o) const;
  SqrtRational operator-() const;
  bool operator==(const SqrtRational& o) const { return sign_ == o.sign_ && rad_ == o.rad_; }

  /// Exact Rational when the radicand is a perfect rational square.
  std::optional<Rational> try_demote() const;

  double to_double() const;

  /// "0", "1*sqrt(p/q)" or "-1*sqrt(p/q)".
  std::string to_string() const;
  static SqrtRational parse(const std::string& text);

 private:
  SqrtRational(int sign, Rational rad) : sign_(sign), rad_(std::move(rad)) {}
  int sign_;
  Rational rad_;
};

inline SqrtRational operator*(const SqrtRational& s, const Rational& q) {
  return s * SqrtRational::from_rational(q);
}

}  // namespace rotsym
