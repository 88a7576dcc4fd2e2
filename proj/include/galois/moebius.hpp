#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galois/binary_form.hpp"
#include "galois/matrix.hpp"
#include "galois/roots.hpp"

namespace galois {

/// An element of PGL(2): an invertible 2x2 matrix up to a nonzero scalar.
class MoebiusElement {
 public:
  MoebiusElement() : m_(Matrix::identity(2)) {}
  /// Throws InputError unless m is 2x2 with nonzero determinant.
  explicit MoebiusElement(Matrix m);

  static MoebiusElement identity() { return MoebiusElement(); }
  static MoebiusElement diagonal(Number a, Number b);
  static MoebiusElement swap();

  const Matrix& matrix() const { return m_; }

  /// Representative whose first nonzero entry (row-major) is 1.
  MoebiusElement canonical() const;
  MoebiusElement inverse() const;
  std::array<Complex, 4> to_complex() const;

  friend MoebiusElement operator*(const MoebiusElement& a, const MoebiusElement& b);
  /// Equality modulo scalars.
  friend bool operator==(const MoebiusElement& a, const MoebiusElement& b);

  /// Canonical representative as text; equal keys iff equal elements.
  std::string key() const;

 private:
  Matrix m_;
};

/// Floating-point counterpart used by the deck oracle, row-major entries.
struct ComplexMoebius {
  std::array<Complex, 4> m{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};

  ComplexMoebius operator*(const ComplexMoebius& o) const;
  ComplexMoebius inverse() const;
  ProjPoint apply(const ProjPoint& p) const;
  /// Representative with unit Frobenius norm.
  ComplexMoebius unit() const;
  /// trace^2 / det, a conjugation- and scale-invariant of the class.
  Complex trace_invariant() const;
};

/// Sine of the angle between the entry vectors: 0 iff projectively equal.
double projective_distance(const ComplexMoebius& a, const ComplexMoebius& b);

/// Order of a finite-order element from trace^2/det (up to max_order), or
/// nothing if no order <= max_order matches within tol.
std::optional<int> element_order(const ComplexMoebius& g, double tol, int max_order = 60);

enum class GroupFamily { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

/// A catalog conjugacy class of finite subgroups of PGL(2).
class GroupKind {
 public:
  static GroupKind cyclic(int m);
  /// m >= 2; the order-2 group is only reachable as cyclic(2).
  static GroupKind dihedral(int m);
  static GroupKind tetrahedral() { return GroupKind(GroupFamily::Tetrahedral, 0); }
  static GroupKind octahedral() { return GroupKind(GroupFamily::Octahedral, 0); }
  static GroupKind icosahedral() { return GroupKind(GroupFamily::Icosahedral, 0); }
  /// From a family name ("cyclic", ...) and parameter m (ignored for polyhedral kinds).
  static GroupKind from_name(const std::string& name, int m);

  GroupFamily family() const { return family_; }
  /// m for cyclic(m) and dihedral(m), 0 for the polyhedral kinds.
  int param() const { return param_; }
  int order() const;
  /// "cyclic", "dihedral", "tetrahedral", ...
  std::string name() const;
  /// "cyclic(3)", "dihedral(2)", "tetrahedral", ...
  std::string label() const;

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
  friend auto operator<=>(const GroupKind&, const GroupKind&) = default;

 private:
  GroupKind(GroupFamily f, int p) : family_(f), param_(p) {}
  GroupFamily family_;
  int param_;
};

/// Catalog kinds of order at most max_order, sorted by order, then family.
std::vector<GroupKind> catalog_kinds(int max_order);

/// The group theta * G_std * theta^-1.
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic(1);
  MoebiusElement theta;

  int order() const { return kind.order(); }
};

/// Pencil (A, B) of the quotient map P^1 -> P^1/G, both of degree |G|.
struct InvariantPair {
  BinaryForm a;
  BinaryForm b;

  int degree() const { return a.degree(); }
};

/// Generators of the standard model of `kind`.
std::vector<MoebiusElement> standard_generators(const GroupKind& kind);

/// All elements of the group generated by `gens` (identity first).
/// Throws ComputationError past max_size elements.
std::vector<MoebiusElement> generate_group(const std::vector<MoebiusElement>& gens,
                                           std::size_t max_size = 1000);

/// The catalog quotient pencil of the standard model.
InvariantPair standard_invariant_pair(const GroupKind& kind);

/// For each generator g the scalar l_g with A∘g = l_g A and B∘g = l_g B, or
/// nothing if some generator moves the pencil otherwise.
std::optional<std::vector<Number>> invariance_scalars(const InvariantPair& pair,
                                                      const std::vector<MoebiusElement>& gens);

bool verify_invariance(const InvariantPair& pair, const std::vector<MoebiusElement>& gens);

/// theta g theta^-1 for every standard generator g.
std::vector<MoebiusElement> conjugated_generators(const GroupSpec& spec);

/// (A∘theta^-1, B∘theta^-1), the quotient pencil of the conjugated group.
InvariantPair conjugated_pair(const GroupSpec& spec);

/// Dimension of the normalizer of the standard model inside PGL(2).
int normalizer_dim(const GroupKind& kind);

/// Identifies a finite group given numerically by all of its elements.
/// Throws ComputationError if the set is not closed within tol or its
/// order/statistics match no catalog kind.
GroupKind classify_group(const std::vector<ComplexMoebius>& elements, double tol);

}  // namespace galois
