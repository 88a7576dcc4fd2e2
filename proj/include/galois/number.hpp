#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galois {

using Rational = mpq_class;

/// p / q in lowest terms (q != 0).
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" into a rational in lowest terms. Throws InputError.
Rational parse_rational(const std::string& text);

/// Formats as "p/q" in lowest terms (integers as "p/1").
std::string format_rational(const Rational& q);

/// Closest rational with denominator <= max_den (continued fractions), if it
/// lies within tol of v.
std::optional<Rational> rational_approximation(double v, long max_den, double tol);

/// Largest cyclotomic order supported by the coefficient layer.
inline constexpr int kMaxCyclotomicOrder = 120;

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Euler's totient of n, i.e. the degree of Q(zeta_n) over Q.
int totient(int n);

/// An exact element of Q or of a cyclotomic field Q(zeta_n).
///
/// The element is stored by its coordinates over Q in the power basis
/// 1, zeta_n, ..., zeta_n^(phi(n)-1). Field order 1 denotes Q. Elements whose
/// irrational coordinates all vanish are demoted to Q, so rational data stays
/// rational under cyclotomic round trips. Binary operations lift both operands
/// into Q(zeta_lcm) first.
class Number {
 public:
  Number() : field_(1), coords_{Rational(0)} {}
  Number(long v) : field_(1), coords_{Rational(v)} {}  // NOLINT(implicit)
  Number(int v) : Number(static_cast<long>(v)) {}       // NOLINT(implicit)
  Number(Rational q) : field_(1), coords_{std::move(q)} { coords_[0].canonicalize(); }  // NOLINT

  /// zeta_n^power, reduced into Q(zeta_n).
  static Number zeta(int n, long power = 1);
  static Number from_coords(int n, std::vector<Rational> coords);

  int field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return field_ == 1; }
  /// Throws ComputationError when the element is not rational.
  const Rational& to_rational() const;
  std::complex<double> to_complex() const;
  /// Extended-precision value; rational coordinates are split into two doubles first.
  std::complex<long double> to_complex_long() const;

  /// The same element expressed in Q(zeta_n); n must be a multiple of field().
  Number lifted(int n) const;
  Number inverse() const;

  Number& operator+=(const Number& o);
  Number& operator-=(const Number& o);
  Number& operator*=(const Number& o);
  Number& operator/=(const Number& o);

  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }
  friend Number operator*(Number a, const Number& b) { return a *= b; }
  friend Number operator/(Number a, const Number& b) { return a /= b; }
  Number operator-() const;

  friend bool operator==(const Number& a, const Number& b);
  friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

  /// Human readable form, e.g. "3/4" or "[n=5: 1/1, 0/1, -1/2, 0/1]".
  std::string str() const;

 private:
  void demote();

  int field_;
  std::vector<Rational> coords_;
};

}  // namespace galois
