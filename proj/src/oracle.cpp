#include "galois/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "galois/errors.hpp"

namespace galois {

RationalSelfMap::RationalSelfMap(BinaryForm p, BinaryForm q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.degree() != q_.degree()) throw InputError("map components differ in degree");
  if (p_.degree() < 1) throw InputError("map degree must be at least 1");
  if (p_.is_zero() || q_.is_zero() || form_gcd(p_, q_).degree() != 0)
    throw InputError("map components are not coprime");
}

RationalSelfMap compose_projection(const ProjectionCenter& center, const LinearSystem& v) {
  auto [p0, p1] = pulled_back_pencil(center, v);
  if (p0.is_zero() || p1.is_zero() || proportional(p0, p1))
    throw InputError("projection undefined on curve");
  BinaryForm g = form_gcd(p0, p1);
  auto q0 = form_divide(p0, g);
  auto q1 = form_divide(p1, g);
  if (!q0 || !q1) throw ComputationError("gcd does not divide the pencil");
  return RationalSelfMap(std::move(*q0), std::move(*q1));
}

namespace {

template <class C>
std::vector<C> multiply(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> out(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class C>
auto max_abs(const std::vector<C>& f) {
  decltype(std::abs(f[0])) m = 0;
  for (const auto& c : f) m = std::max(m, std::abs(c));
  return m;
}

template <class C>
std::vector<C> compose_generic(const std::vector<C>& f, const std::array<C, 4>& m) {
  const std::vector<C> l1{m[0], m[1]};
  const std::vector<C> l2{m[2], m[3]};
  std::vector<C> h{f[0]};
  std::vector<C> l2_pow{C(1)};
  for (std::size_t k = 1; k < f.size(); ++k) {
    l2_pow = multiply(l2_pow, l2);
    h = multiply(h, l1);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += f[k] * l2_pow[i];
  }
  return h;
}

// Residual evaluated in extended precision: the expansion of p(sigma) cancels
// heavily when sigma's fixed points are close.
double residual_long(const LongForm& p, const LongForm& q, const ComplexMoebius& sigma) {
  const ComplexMoebius s = sigma.unit();
  const std::array<LongComplex, 4> m{LongComplex(s.m[0]), LongComplex(s.m[1]), LongComplex(s.m[2]),
                                     LongComplex(s.m[3])};
  const LongForm ps = compose_generic(p, m);
  const LongForm qs = compose_generic(q, m);
  const LongForm lhs = multiply(ps, q);
  const LongForm rhs = multiply(qs, p);
  long double num = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) num = std::max(num, std::abs(lhs[i] - rhs[i]));
  const long double den = max_abs(ps) * max_abs(q) + max_abs(qs) * max_abs(p);
  return den > 0 ? static_cast<double>(num / den) : 1.0;
}

std::optional<std::pair<ComplexMoebius, bool>> snap_and_certify(const RationalSelfMap& f,
                                                               const ComplexMoebius& sigma) {
  double scale = 0.0;
  for (const auto& e : sigma.m) scale = std::max(scale, std::abs(e));
  ComplexMoebius c = sigma;
  for (const auto& e : sigma.m)
    if (std::abs(e) > 1e-9 * scale) {
      Complex lead = e;
      for (auto& x : c.m) x /= lead;
      break;
    }
  Matrix exact(2, 2);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(c.m[i].imag()) > 1e-9) return std::nullopt;
    auto q = rational_approximation(c.m[i].real(), 1000, 1e-9);
    if (!q) return std::nullopt;
    exact(i / 2, i % 2) = Number(*q);
  }
  if (exact.det2().is_zero()) return std::nullopt;
  bool ok = form_mul(form_compose(f.p(), exact), f.q()) == form_mul(form_compose(f.q(), exact), f.p());
  ComplexMoebius snapped;
  for (int i = 0; i < 4; ++i) snapped.m[i] = exact(i / 2, i % 2).to_complex();
  return std::make_pair(snapped.unit(), ok);
}

// Exact: a binary form has a repeated root iff its partials share a factor.
bool squarefree(const BinaryForm& f) {
  return form_gcd(form_partial_x(f), form_partial_y(f)).degree() == 0;
}

// Candidates this close to a deck map are worth a least-squares refit.
constexpr double kRefineThreshold = 1e-4;

bool fiber_is_generic(const std::vector<ProjPoint>& fiber) {
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j)
      if (chordal_distance(fiber[i], fiber[j]) < 1e-5) return false;
  return true;
}

// Nearest point of `fiber` to x in the chordal metric.
const ProjPoint& nearest(const std::vector<ProjPoint>& fiber, const ProjPoint& x) {
  std::size_t best = 0;
  double dist = chordal_distance(fiber[0], x);
  for (std::size_t i = 1; i < fiber.size(); ++i) {
    double di = chordal_distance(fiber[i], x);
    if (di < dist) {
      dist = di;
      best = i;
    }
  }
  return fiber[best];
}

// Least-squares refit of sigma over every fiber point: each a in a fiber is
// paired with the fiber point nearest sigma(a), and b ~ M a is solved as the
// smallest right singular vector of the stacked cross-product equations.
ComplexMoebius refine(const ComplexMoebius& sigma, const std::array<std::vector<ProjPoint>, 3>& fibers) {
  std::size_t rows = 0;
  for (const auto& f : fibers) rows += f.size();
  Eigen::MatrixXcd a(rows, 4);
  std::size_t r = 0;
  for (const auto& f : fibers)
    for (const auto& pt : f) {
      const ProjPoint x = pt.unit();
      const ProjPoint y = nearest(f, sigma.apply(x).unit()).unit();
      a(r, 0) = y.y * x.x;
      a(r, 1) = y.y * x.y;
      a(r, 2) = -y.x * x.x;
      a(r, 3) = -y.x * x.y;
      ++r;
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXcd v = svd.matrixV().col(3);
  return ComplexMoebius{{v(0), v(1), v(2), v(3)}}.unit();
}

}  // namespace

ComplexForm compose_numeric(const ComplexForm& f, const ComplexMoebius& sigma) {
  return compose_generic(f, sigma.m);
}

double deck_residual(const ComplexForm& p, const ComplexForm& q, const ComplexMoebius& sigma) {
  return residual_long(LongForm(p.begin(), p.end()), LongForm(q.begin(), q.end()), sigma);
}

ComplexMoebius moebius_from_points(const std::array<ProjPoint, 3>& a,
                                   const std::array<ProjPoint, 3>& b) {
  // T sends [1:0], [0:1], [1:1] to the three points.
  auto frame = [](const std::array<ProjPoint, 3>& pts) {
    ProjPoint u0 = pts[0].unit(), u1 = pts[1].unit(), u2 = pts[2].unit();
    Complex det = u0.x * u1.y - u1.x * u0.y;
    Complex l0 = (u2.x * u1.y - u1.x * u2.y) / det;
    Complex l1 = (u0.x * u2.y - u2.x * u0.y) / det;
    return ComplexMoebius{{l0 * u0.x, l1 * u1.x, l0 * u0.y, l1 * u1.y}};
  };
  return (frame(b) * frame(a).inverse()).unit();
}

DeckSet deck_transformations(const RationalSelfMap& f, const OracleConfig& config) {
  const int e = f.degree();
  const LongForm p = to_complex_long(f.p());
  const LongForm q = to_complex_long(f.q());
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> numer(-60, 60);
  std::uniform_int_distribution<long> denom(1, 60);

  std::array<std::vector<ProjPoint>, 3> fibers;
  std::vector<std::pair<long, long>> used;
  for (int k = 0; k < 3; ++k) {
    bool found = false;
    for (int attempt = 0; attempt <= 10 && !found; ++attempt) {
      long t0 = numer(rng), t1 = denom(rng);
      Rational t(t0, t1);
      t.canonicalize();
      std::pair<long, long> key{t.get_num().get_si(), t.get_den().get_si()};
      if (std::find(used.begin(), used.end(), key) != used.end()) continue;
      // Fiber over [t0:t1]: t1 p - t0 q = 0.
      BinaryForm fiber_form = f.p() * Number(t1) - f.q() * Number(t0);
      if (fiber_form.is_zero() || !squarefree(fiber_form)) continue;
      auto roots = roots_numeric(fiber_form);
      if (!fiber_is_generic(roots)) continue;
      fibers[k] = std::move(roots);
      used.push_back(key);
      found = true;
    }
    if (!found) throw ComputationError("non-generic targets");
  }

  DeckSet deck;
  if (config.tol_accept >= config.tol_dedupe)
    deck.warnings.push_back("acceptance tolerance is not tighter than the dedupe tolerance; "
                            "near-duplicate deck candidates may be admitted");

  const std::array<ProjPoint, 3> base{fibers[0][0], fibers[1][0], fibers[2][0]};
  int collapsed = 0;
  for (const auto& b0 : fibers[0])
    for (const auto& b1 : fibers[1])
      for (const auto& b2 : fibers[2]) {
        ComplexMoebius sigma = moebius_from_points(base, {b0, b1, b2});
        double r = residual_long(p, q, sigma);
        if (!(r < std::max(kRefineThreshold, config.tol_accept))) continue;
        if (r >= config.tol_accept * 1e-2) {
          ComplexMoebius refined = refine(sigma, fibers);
          double rr = residual_long(p, q, refined);
          if (rr < r) {
            sigma = refined;
            r = rr;
          }
        }
        if (!(r < config.tol_accept)) continue;
        auto dup = std::find_if(deck.elements.begin(), deck.elements.end(), [&](const auto& g) {
          return projective_distance(g, sigma) < config.tol_dedupe;
        });
        if (dup != deck.elements.end()) {
          ++collapsed;
          auto idx = dup - deck.elements.begin();
          deck.residuals[idx] = std::min(deck.residuals[idx], r);
          continue;
        }
        deck.elements.push_back(sigma);
        deck.residuals.push_back(r);
      }
  if (collapsed > 0)
    deck.warnings.push_back("dedupe collapsed " + std::to_string(collapsed) +
                            " near-duplicate deck candidates");

  // Identity first.
  const ComplexMoebius id;
  auto it = std::find_if(deck.elements.begin(), deck.elements.end(), [&](const auto& g) {
    return projective_distance(g, id) < config.tol_dedupe;
  });
  if (it == deck.elements.end()) {
    deck.warnings.push_back("identity not recovered numerically; inserted");
    deck.elements.insert(deck.elements.begin(), id.unit());
    deck.residuals.insert(deck.residuals.begin(), 0.0);
  } else {
    auto idx = it - deck.elements.begin();
    std::rotate(deck.elements.begin(), it, it + 1);
    std::rotate(deck.residuals.begin(), deck.residuals.begin() + idx,
                deck.residuals.begin() + idx + 1);
  }

  for (std::size_t i = 0; i < deck.elements.size(); ++i) {
    bool cert = false;
    if (auto snapped = snap_and_certify(f, deck.elements[i]); snapped && snapped->second) {
      deck.elements[i] = snapped->first;
      deck.residuals[i] = 0.0;
      cert = true;
    }
    deck.certified.push_back(cert);
    deck.residual_max = std::max(deck.residual_max, deck.residuals[i]);
  }

  for (const auto& a : deck.elements) {
    for (const auto& b : deck.elements) {
      ComplexMoebius ab = (a * b).unit();
      bool present = std::any_of(deck.elements.begin(), deck.elements.end(), [&](const auto& g) {
        return projective_distance(g, ab) < config.tol_dedupe;
      });
      if (!present) deck.closed = false;
    }
  }
  if (!deck.closed) deck.warnings.push_back("deck set is not closed under composition");
  if (static_cast<int>(deck.size()) > e)
    deck.warnings.push_back("deck set has more elements than the map degree");
  return deck;
}

OracleReport is_galois(const RationalSelfMap& f, const OracleConfig& config) {
  DeckSet deck = deck_transformations(f, config);
  OracleReport report;
  report.degree = f.degree();
  report.deck_order = static_cast<int>(deck.size());
  report.galois = report.deck_order == report.degree;
  report.residual_max = deck.residual_max;
  report.seed = config.seed;
  report.certified = static_cast<int>(std::count(deck.certified.begin(), deck.certified.end(), true));
  report.warnings = deck.warnings;
  if (report.galois)
    report.kind = report.degree == 1 ? GroupKind::cyclic(1)
                                     : classify_group(deck.elements, config.tol_dedupe);
  return report;
}

OracleReport is_galois(const ProjectionCenter& center, const LinearSystem& v,
                       const OracleConfig& config) {
  return is_galois(compose_projection(center, v), config);
}

}  // namespace galois
