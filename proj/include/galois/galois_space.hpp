#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "galois/binary_form.hpp"
#include "galois/matrix.hpp"
#include "galois/moebius.hpp"
#include "galois/roots.hpp"

namespace galois {

/// A linear system V of degree-d forms, given by a basis of N+1 forms. It
/// defines the map P^1 -> P^N; the complete system is the monomial basis.
class LinearSystem {
 public:
  /// Validates N >= 1, a common degree and exact linear independence.
  LinearSystem(int degree, std::vector<BinaryForm> basis);
  static LinearSystem complete(int degree);

  int degree() const { return degree_; }
  const std::vector<BinaryForm>& basis() const { return basis_; }
  /// N + 1
  int dimension() const { return static_cast<int>(basis_.size()); }
  bool is_complete() const { return dimension() == degree_ + 1; }

  /// (d+1) x (N+1), column i = coefficients of basis form i.
  const Matrix& basis_matrix() const { return basis_matrix_; }
  /// Coordinates of f in the basis, or nothing when f is outside V.
  std::optional<Vector> coordinates(const BinaryForm& f) const;
  BinaryForm combine(const Vector& coords) const;

 private:
  int degree_;
  std::vector<BinaryForm> basis_;
  Matrix basis_matrix_;
};

/// Codimension-2 center W of P^N = P(V^dual), stored by the 2 x (N+1) matrix
/// of its defining pencil U <= V (W is the annihilator of U). Row operations
/// on the pencil do not change the center.
class ProjectionCenter {
 public:
  /// Throws InputError unless the pencil is 2 x (N+1) of rank 2.
  ProjectionCenter(int degree, Matrix pencil);

  int degree() const { return degree_; }
  const Matrix& pencil() const { return pencil_; }

 private:
  int degree_;
  Matrix pencil_;
};

/// Normalized 2x2 minors of a pencil matrix, ordered by (i, j), i < j,
/// lexicographically; the first nonzero minor is 1.
struct PluckerPoint {
  std::vector<Number> minors;

  /// Index pairs for n columns in the minor ordering.
  static std::vector<std::pair<int, int>> index_pairs(int n);
  friend bool operator==(const PluckerPoint&, const PluckerPoint&) = default;
  std::string key() const;
};

/// Basis of the Galois sections {s of degree d-m : s A, s B in V}. Empty when
/// m > d or no section exists.
std::vector<BinaryForm> galois_space(const InvariantPair& pair, const LinearSystem& v);

/// The center whose pencil rows are the coordinates of s A and s B in V.
/// Throws InputError when s is zero, of the wrong degree, or s A / s B leaves V.
ProjectionCenter center_from_section(const InvariantPair& pair, const BinaryForm& s,
                                     const LinearSystem& v);

/// Throws InputError when the pencil has rank < 2.
PluckerPoint plucker(const ProjectionCenter& center);
PluckerPoint plucker(const Matrix& pencil);

/// The two degree-d forms R * (basis of V).
std::pair<BinaryForm, BinaryForm> pulled_back_pencil(const ProjectionCenter& center,
                                                     const LinearSystem& v);

/// A point of P^1 mapped into the center; exact when it is rational.
struct CurvePoint {
  ProjPoint approx;
  std::optional<std::pair<Rational, Rational>> exact;
};

/// Points p with phi(p) in W: the roots of the base form gcd(P0, P1).
struct CurveIncidence {
  BinaryForm base_form;
  std::vector<CurvePoint> points;
};

CurveIncidence meets_curve(const ProjectionCenter& center, const LinearSystem& v);

}  // namespace galois
