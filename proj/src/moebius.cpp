#include "galois/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "galois/errors.hpp"

namespace galois {

// ---------------------------------------------------------------- elements

MoebiusElement::MoebiusElement(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != 2 || m_.cols() != 2) throw InputError("a Moebius element needs a 2x2 matrix");
  if (m_.det2().is_zero()) throw InputError("singular Moebius matrix " + m_.str());
}

MoebiusElement MoebiusElement::diagonal(Number a, Number b) {
  return MoebiusElement(Matrix{{std::move(a), 0}, {0, std::move(b)}});
}

MoebiusElement MoebiusElement::swap() { return MoebiusElement(Matrix{{0, 1}, {1, 0}}); }

MoebiusElement MoebiusElement::canonical() const {
  Matrix c = m_;
  for (std::size_t i = 0; i < 4; ++i) {
    const Number& e = m_(i / 2, i % 2);
    if (e.is_zero()) continue;
    Number inv = e.inverse();
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t k = 0; k < 2; ++k) c(r, k) = m_(r, k) * inv;
    break;
  }
  return MoebiusElement(std::move(c));
}

MoebiusElement MoebiusElement::inverse() const {
  // The adjugate represents the inverse projectively.
  return MoebiusElement(Matrix{{m_(1, 1), -m_(0, 1)}, {-m_(1, 0), m_(0, 0)}});
}

std::array<Complex, 4> MoebiusElement::to_complex() const {
  return {m_(0, 0).to_complex(), m_(0, 1).to_complex(), m_(1, 0).to_complex(),
          m_(1, 1).to_complex()};
}

MoebiusElement operator*(const MoebiusElement& a, const MoebiusElement& b) {
  return MoebiusElement(a.m_ * b.m_);
}

bool operator==(const MoebiusElement& a, const MoebiusElement& b) {
  return a.canonical().m_ == b.canonical().m_;
}

std::string MoebiusElement::key() const { return canonical().m_.str(); }

// ------------------------------------------------------- numeric elements

ComplexMoebius ComplexMoebius::operator*(const ComplexMoebius& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

ComplexMoebius ComplexMoebius::inverse() const { return {{m[3], -m[1], -m[2], m[0]}}; }

ProjPoint ComplexMoebius::apply(const ProjPoint& p) const {
  return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

ComplexMoebius ComplexMoebius::unit() const {
  double n = 0.0;
  for (const auto& e : m) n += std::norm(e);
  n = std::sqrt(n);
  ComplexMoebius r = *this;
  for (auto& e : r.m) e /= n;
  return r;
}

Complex ComplexMoebius::trace_invariant() const {
  Complex tr = m[0] + m[3];
  Complex det = m[0] * m[3] - m[1] * m[2];
  return tr * tr / det;
}

double projective_distance(const ComplexMoebius& a, const ComplexMoebius& b) {
  // Norm of the component of unit(a) orthogonal to b: the sine of the angle,
  // computed without the cancellation of sqrt(1 - cos^2).
  const ComplexMoebius ua = a.unit(), ub = b.unit();
  Complex inner = 0.0;
  for (int i = 0; i < 4; ++i) inner += std::conj(ub.m[i]) * ua.m[i];
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r += std::norm(ua.m[i] - inner * ub.m[i]);
  return std::sqrt(r);
}

std::optional<int> element_order(const ComplexMoebius& g, double tol, int max_order) {
  const Complex tau = g.trace_invariant();
  for (int n = 1; n <= max_order; ++n)
    for (int k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      double expected = 2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
      if (std::abs(tau - expected) < tol) return n;
    }
  return std::nullopt;
}

// ------------------------------------------------------------ group kinds

GroupKind GroupKind::cyclic(int m) {
  if (m < 1) throw InputError("cyclic group order must be >= 1");
  return GroupKind(GroupFamily::Cyclic, m);
}

GroupKind GroupKind::dihedral(int m) {
  if (m < 2) throw InputError("dihedral(" + std::to_string(m) + ") is not a catalog kind; use cyclic(2)");
  return GroupKind(GroupFamily::Dihedral, m);
}

GroupKind GroupKind::from_name(const std::string& name, int m) {
  if (name == "cyclic") return cyclic(m);
  if (name == "dihedral") return dihedral(m);
  if (name == "tetrahedral") return tetrahedral();
  if (name == "octahedral") return octahedral();
  if (name == "icosahedral") return icosahedral();
  throw InputError("unknown group kind '" + name + "'");
}

int GroupKind::order() const {
  switch (family_) {
    case GroupFamily::Cyclic: return param_;
    case GroupFamily::Dihedral: return 2 * param_;
    case GroupFamily::Tetrahedral: return 12;
    case GroupFamily::Octahedral: return 24;
    case GroupFamily::Icosahedral: return 60;
  }
  return 0;
}

std::string GroupKind::name() const {
  switch (family_) {
    case GroupFamily::Cyclic: return "cyclic";
    case GroupFamily::Dihedral: return "dihedral";
    case GroupFamily::Tetrahedral: return "tetrahedral";
    case GroupFamily::Octahedral: return "octahedral";
    case GroupFamily::Icosahedral: return "icosahedral";
  }
  return "";
}

std::string GroupKind::label() const {
  if (family_ == GroupFamily::Cyclic || family_ == GroupFamily::Dihedral)
    return name() + "(" + std::to_string(param_) + ")";
  return name();
}

std::vector<GroupKind> catalog_kinds(int max_order) {
  std::vector<GroupKind> kinds;
  for (int m = 1; m <= max_order; ++m) kinds.push_back(GroupKind::cyclic(m));
  for (int m = 2; 2 * m <= max_order; ++m) kinds.push_back(GroupKind::dihedral(m));
  if (max_order >= 12) kinds.push_back(GroupKind::tetrahedral());
  if (max_order >= 24) kinds.push_back(GroupKind::octahedral());
  if (max_order >= 60) kinds.push_back(GroupKind::icosahedral());
  std::stable_sort(kinds.begin(), kinds.end(), [](const GroupKind& a, const GroupKind& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.family() < b.family();
  });
  return kinds;
}

// ---------------------------------------------------------------- catalog

namespace {

// x^e y^0 ... as x^a y^b of degree a+b.
BinaryForm xy_monomial(int a, int b) { return BinaryForm::monomial(a + b, b); }

// Sum of c_k x^(d - k) y^k for sparse (k, c_k).
BinaryForm sparse_form(int d, std::initializer_list<std::pair<int, long>> terms) {
  BinaryForm f = BinaryForm::zero(d);
  for (auto [k, c] : terms) f += BinaryForm::monomial(d, k, Number(c));
  return f;
}

// Octahedral vertex form x y (x^4 - y^4).
BinaryForm octahedron_vertices() { return sparse_form(6, {{1, 1}, {5, -1}}); }

// Order-3 rotation permuting the octahedron's coordinate axes.
MoebiusElement axis_rotation() {
  const Number i = Number::zeta(4);
  return MoebiusElement(Matrix{{1, i}, {1, -i}});
}

}  // namespace

std::vector<MoebiusElement> standard_generators(const GroupKind& kind) {
  switch (kind.family()) {
    case GroupFamily::Cyclic:
      if (kind.param() == 1) return {};
      return {MoebiusElement::diagonal(Number::zeta(kind.param()), 1)};
    case GroupFamily::Dihedral:
      return {MoebiusElement::diagonal(Number::zeta(kind.param()), 1), MoebiusElement::swap()};
    case GroupFamily::Tetrahedral:
      return {MoebiusElement::diagonal(-1, 1), MoebiusElement::swap(), axis_rotation()};
    case GroupFamily::Octahedral:
      return {MoebiusElement::diagonal(Number::zeta(4), 1), MoebiusElement::swap(), axis_rotation()};
    case GroupFamily::Icosahedral: {
      // Klein's generators z -> eps z, z -> -1/z and the order-2 map T
      // (the 1/sqrt5 normalization of T is dropped projectively).
      const Number e1 = Number::zeta(5, 1), e2 = Number::zeta(5, 2);
      const Number e3 = Number::zeta(5, 3), e4 = Number::zeta(5, 4);
      const Number a = e1 - e4;
      const Number b = e2 - e3;
      return {MoebiusElement::diagonal(e1, 1), MoebiusElement(Matrix{{0, -1}, {1, 0}}),
              MoebiusElement(Matrix{{-a, b}, {b, a}})};
    }
  }
  return {};
}

std::vector<MoebiusElement> generate_group(const std::vector<MoebiusElement>& gens,
                                           std::size_t max_size) {
  std::vector<MoebiusElement> elements{MoebiusElement::identity()};
  std::unordered_map<std::string, std::size_t> seen{{elements[0].key(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      MoebiusElement h = (elements[idx] * g).canonical();
      std::string k = h.key();
      if (seen.contains(k)) continue;
      if (elements.size() >= max_size)
        throw ComputationError("group closure exceeded " + std::to_string(max_size) + " elements");
      seen.emplace(std::move(k), elements.size());
      elements.push_back(std::move(h));
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

InvariantPair standard_invariant_pair(const GroupKind& kind) {
  const int m = kind.param();
  switch (kind.family()) {
    case GroupFamily::Cyclic:
      return {xy_monomial(m, 0), xy_monomial(0, m)};
    case GroupFamily::Dihedral:
      return {xy_monomial(m, m), xy_monomial(2 * m, 0) + xy_monomial(0, 2 * m)};
    case GroupFamily::Tetrahedral: {
      // Squared edge-midpoint form and the sum of the cubed face forms.
      BinaryForm t = octahedron_vertices();
      BinaryForm chi = sparse_form(12, {{0, 1}, {4, -33}, {8, -33}, {12, 1}});
      return {form_mul(t, t), chi};
    }
    case GroupFamily::Octahedral: {
      BinaryForm t = octahedron_vertices();
      BinaryForm w = sparse_form(8, {{0, 1}, {4, 14}, {8, 1}});
      return {form_pow(t, 4), form_pow(w, 3)};
    }
    case GroupFamily::Icosahedral: {
      BinaryForm f = sparse_form(12, {{1, 1}, {6, 11}, {11, -1}});
      // Klein's H = Hessian(f) / 121.
      BinaryForm fxx = form_partial_x(form_partial_x(f));
      BinaryForm fyy = form_partial_y(form_partial_y(f));
      BinaryForm fxy = form_partial_y(form_partial_x(f));
      BinaryForm h = (form_mul(fxx, fyy) - form_mul(fxy, fxy)) * Number(Rational(1, 121));
      return {form_pow(f, 5) * Number(1728), form_pow(h, 3)};
    }
  }
  return {};
}

std::optional<std::vector<Number>> invariance_scalars(const InvariantPair& pair,
                                                      const std::vector<MoebiusElement>& gens) {
  const int la = pair.a.leading_index();
  if (la < 0 || pair.b.is_zero()) return std::nullopt;
  std::vector<Number> scalars;
  for (const auto& g : gens) {
    BinaryForm ga = form_compose(pair.a, g.matrix());
    BinaryForm gb = form_compose(pair.b, g.matrix());
    Number lambda = ga[la] / pair.a[la];
    if (ga != pair.a * lambda || gb != pair.b * lambda) return std::nullopt;
    scalars.push_back(std::move(lambda));
  }
  return scalars;
}

bool verify_invariance(const InvariantPair& pair, const std::vector<MoebiusElement>& gens) {
  return invariance_scalars(pair, gens).has_value();
}

std::vector<MoebiusElement> conjugated_generators(const GroupSpec& spec) {
  std::vector<MoebiusElement> out;
  MoebiusElement inv = spec.theta.inverse();
  for (const auto& g : standard_generators(spec.kind)) out.push_back(spec.theta * g * inv);
  return out;
}

InvariantPair conjugated_pair(const GroupSpec& spec) {
  Matrix inv = spec.theta.matrix().inverse();
  InvariantPair std_pair = standard_invariant_pair(spec.kind);
  return {form_compose(std_pair.a, inv), form_compose(std_pair.b, inv)};
}

int normalizer_dim(const GroupKind& kind) {
  if (kind.family() == GroupFamily::Cyclic) return kind.param() == 1 ? 3 : 1;
  return 0;
}

GroupKind classify_group(const std::vector<ComplexMoebius>& elements, double tol) {
  const std::size_t n = elements.size();
  if (n == 0) throw ComputationError("cannot classify an empty element set");
  auto find = [&](const ComplexMoebius& g) {
    for (std::size_t i = 0; i < n; ++i)
      if (projective_distance(g, elements[i]) < tol) return true;
    return false;
  };
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!find((a * b).unit()))
        throw ComputationError("element set is not closed under composition within tolerance");

  const double order_tol = std::max(tol, 1e-8);
  std::map<int, int> order_counts;
  for (const auto& g : elements) {
    auto ord = element_order(g, order_tol, static_cast<int>(std::max<std::size_t>(n, 1)));
    if (!ord) throw ComputationError("element of undetermined finite order in group");
    ++order_counts[*ord];
  }
  const int size = static_cast<int>(n);
  if (order_counts.contains(size)) return GroupKind::cyclic(size);
  if (size % 2 == 0) {
    int above_two = 0;
    for (auto [ord, cnt] : order_counts)
      if (ord > 2) above_two += cnt;
    if (above_two <= size / 2 && size >= 4) return GroupKind::dihedral(size / 2);
  }
  const std::map<int, int> tetra{{1, 1}, {2, 3}, {3, 8}};
  const std::map<int, int> octa{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<int, int> icosa{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (size == 12 && order_counts == tetra) return GroupKind::tetrahedral();
  if (size == 24 && order_counts == octa) return GroupKind::octahedral();
  if (size == 60 && order_counts == icosa) return GroupKind::icosahedral();
  throw ComputationError("group of order " + std::to_string(size) + " matches no catalog kind");
}

}  // namespace galois
