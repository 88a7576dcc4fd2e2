#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois/binary_form.hpp"
#include "galois/galois_space.hpp"
#include "galois/moebius.hpp"

namespace galois {

/// The map [p:q] : P^1 -> P^1 with coprime p, q of common degree e >= 1.
class RationalSelfMap {
 public:
  /// Throws InputError unless deg p = deg q >= 1 and gcd(p, q) = 1.
  RationalSelfMap(BinaryForm p, BinaryForm q);

  const BinaryForm& p() const { return p_; }
  const BinaryForm& q() const { return q_; }
  int degree() const { return p_.degree(); }

 private:
  BinaryForm p_;
  BinaryForm q_;
};

/// Projection from the center composed with the map given by V, with the
/// common base divisor removed. Throws InputError if the pencil collapses on
/// the curve ("projection undefined on curve").
RationalSelfMap compose_projection(const ProjectionCenter& center, const LinearSystem& v);

struct OracleConfig {
  double tol_accept = 1e-8;
  double tol_dedupe = 1e-6;
  std::uint64_t seed = 0;
};

/// Deck transformations of a map found numerically, f∘sigma = f.
struct DeckSet {
  std::vector<ComplexMoebius> elements;  // identity first
  std::vector<double> residuals;
  /// Elements whose rational snapping passed an exact f∘sigma = f check.
  std::vector<bool> certified;
  double residual_max = 0.0;
  bool closed = true;
  std::vector<std::string> warnings;

  std::size_t size() const { return elements.size(); }
};

/// Normalized coefficient residual of p(sigma) q - q(sigma) p, evaluated in
/// extended precision.
double deck_residual(const ComplexForm& p, const ComplexForm& q, const ComplexMoebius& sigma);

/// Substitutes sigma (x, y)^T into a numeric form.
ComplexForm compose_numeric(const ComplexForm& f, const ComplexMoebius& sigma);

/// The Moebius map sending a_i to b_i, i = 0, 1, 2 (distinct points).
ComplexMoebius moebius_from_points(const std::array<ProjPoint, 3>& a,
                                   const std::array<ProjPoint, 3>& b);

/// Searches all Moebius maps sending three fixed fiber points to candidate
/// points of their fibers. Throws ComputationError when no three generic
/// fibers are found within 10 resamples each.
DeckSet deck_transformations(const RationalSelfMap& f, const OracleConfig& config = {});

struct OracleReport {
  bool galois = false;
  int degree = 0;
  int deck_order = 0;
  std::optional<GroupKind> kind;
  double residual_max = 0.0;
  std::uint64_t seed = 0;
  int certified = 0;
  std::vector<std::string> warnings;
};

/// Galois iff the deck group order equals the map degree.
OracleReport is_galois(const ProjectionCenter& center, const LinearSystem& v,
                       const OracleConfig& config = {});
OracleReport is_galois(const RationalSelfMap& f, const OracleConfig& config = {});

}  // namespace galois
