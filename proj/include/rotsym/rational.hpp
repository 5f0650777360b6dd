#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rotsym {

using BigInt = mpz_class;

/// Exact rational; gmp keeps it normalized (gcd 1, positive denominator)
/// through arithmetic.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Canonical "p/q" ("p" when q == 1), matching mpq's own convention.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p"; validates and canonicalizes. Throws InputError.
Rational rational_from_string(const std::string& text);

bool is_perfect_square(const BigInt& n);

struct SnapOptions {
  double tolerance = 1e-10;
  long max_denominator = 1000000;
};

/// Nearest rational with denominator <= max_denominator (continued
/// fractions); nullopt when no such rational sits within tolerance.
std::optional<Rational> try_snap(double x, const SnapOptions& opts = {});

}  // namespace rotsym
