#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/matrix.hpp"
#include "galois/number.hpp"

namespace galois {

/// Homogeneous polynomial in x, y of fixed degree d.
///
/// coeffs()[i] is the coefficient of x^(d-i) y^i. The zero form of any degree
/// is representable; operations that need a nonzero section reject it.
class BinaryForm {
 public:
  BinaryForm() : coeffs_{Number(0)} {}
  explicit BinaryForm(std::vector<Number> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm constant(Number c) { return BinaryForm({std::move(c)}); }
  /// c * x^(degree - y_power) * y^y_power
  static BinaryForm monomial(int degree, int y_power, Number c = 1);
  static BinaryForm x() { return monomial(1, 0); }
  static BinaryForm y() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Number>& coeffs() const { return coeffs_; }
  const Number& operator[](int i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_constant() const { return degree() == 0; }
  /// Index of the first nonzero coefficient, -1 for the zero form.
  int leading_index() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Number& c);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Number& c) { return a *= c; }
  friend BinaryForm operator*(const Number& c, BinaryForm a) { return a *= c; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm operator-() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

  /// Polynomial notation, e.g. "x^2 - 3/2*x*y + y^2".
  std::string str() const;

 private:
  std::vector<Number> coeffs_;
};

/// Exact product; degree adds.
BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g);

BinaryForm form_pow(const BinaryForm& f, int k);

/// Greatest common divisor, leading nonzero coefficient scaled to 1.
/// Throws InputError when both inputs are zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// f(M (x, y)^T). Right action: compose(compose(f, M), N) = compose(f, M N).
/// Throws InputError for a singular or non-2x2 M.
BinaryForm form_compose(const BinaryForm& f, const Matrix& m);

/// Exact quotient f / g, or nothing when g does not divide f.
std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g);

BinaryForm form_partial_x(const BinaryForm& f);
BinaryForm form_partial_y(const BinaryForm& f);

/// Scales so the leading nonzero coefficient is 1 (zero form unchanged).
BinaryForm normalized(const BinaryForm& f);

/// True iff f = c g for a nonzero scalar c (both nonzero, equal degree).
bool proportional(const BinaryForm& f, const BinaryForm& g);

/// Matrix of multiplication by s on degree-m forms, in monomial bases:
/// (deg s + m + 1) x (m + 1), column j = coefficients of s * x^(m-j) y^j.
Matrix multiplication_matrix(const BinaryForm& s, int m);

/// Coefficient vectors of `forms` as rows; all forms must share a degree.
Matrix coefficient_matrix(const std::vector<BinaryForm>& forms);

}  // namespace galois
