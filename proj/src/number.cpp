#include "galois/number.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "galois/errors.hpp"

namespace galois {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw InputError("empty rational literal");
  if (t.front() == '+') t.erase(t.begin());
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw InputError("malformed rational literal '" + text + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_approximation(double v, long max_den, double tol) {
  if (!std::isfinite(v)) return std::nullopt;
  // Convergents h/k of the continued fraction of v.
  long double x = v;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  Rational best(h, k);
  for (int it = 0; it < 64 && frac > 1e-18L; ++it) {
    x = 1.0L / frac;
    long a = static_cast<long>(std::floor(x));
    frac = x - std::floor(x);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    best = Rational(h, k);
    if (std::abs(best.get_d() - v) < tol * 1e-3) break;
  }
  best.canonicalize();
  if (std::abs(best.get_d() - v) > tol) return std::nullopt;
  return best;
}

namespace {

using IntPoly = std::vector<long>;

std::array<IntPoly, kMaxCyclotomicOrder + 1> build_cyclotomic_table() {
  std::array<IntPoly, kMaxCyclotomicOrder + 1> table;
  table[0] = {1};
  for (int n = 1; n <= kMaxCyclotomicOrder; ++n) {
    // x^n - 1 divided by every Phi_k with k | n, k < n.
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int k = 1; k < n; ++k) {
      if (n % k != 0) continue;
      const IntPoly& div = table[k];
      const int dd = static_cast<int>(div.size()) - 1;
      IntPoly quot(p.size() - dd, 0);
      for (int i = static_cast<int>(p.size()) - 1; i >= dd; --i) {
        long c = p[i];  // divisor is monic
        quot[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) p[i - dd + j] -= c * div[j];
      }
      p = std::move(quot);
    }
    table[n] = std::move(p);
  }
  return table;
}

int normalized_order(int n) { return n <= 2 ? 1 : n; }

void check_order(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder)
    throw ComputationError("cyclotomic order " + std::to_string(n) + " outside supported range");
}

// Reduces a power-basis polynomial modulo Phi_n in place, leaving phi(n) coords.
void reduce_mod_cyclotomic(std::vector<Rational>& p, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= deg; --k) {
    if (sgn(p[k]) == 0) continue;
    Rational c = p[k];
    for (int j = 0; j <= deg; ++j)
      if (phi[j] != 0) p[k - deg + j] -= c * phi[j];
  }
  p.resize(deg, Rational(0));
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static const auto table = build_cyclotomic_table();
  check_order(n);
  return table[n];
}

int totient(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

Number Number::zeta(int n, long power) {
  if (n < 1) throw InputError("root of unity order must be positive");
  if (n == 2) return Number(power % 2 == 0 ? 1 : -1);
  n = normalized_order(n);
  if (n == 1) return Number(1);
  check_order(n);
  long e = ((power % n) + n) % n;
  std::vector<Rational> p(std::max<long>(e + 1, totient(n)), Rational(0));
  p[e] = 1;
  Number z;
  z.field_ = n;
  reduce_mod_cyclotomic(p, n);
  z.coords_ = std::move(p);
  z.demote();
  return z;
}

Number Number::from_coords(int n, std::vector<Rational> coords) {
  n = normalized_order(n);
  check_order(n);
  if (coords.size() > static_cast<std::size_t>(totient(n)))
    throw InputError("too many coordinates for Q(zeta_" + std::to_string(n) + ")");
  for (auto& c : coords) c.canonicalize();
  coords.resize(totient(n), Rational(0));
  Number z;
  z.field_ = n;
  z.coords_ = std::move(coords);
  z.demote();
  return z;
}

void Number::demote() {
  if (field_ == 1) return;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return;
  field_ = 1;
  coords_.resize(1);
}

bool Number::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Number::is_one() const { return field_ == 1 && coords_[0] == 1; }

const Rational& Number::to_rational() const {
  if (field_ != 1) throw ComputationError("element " + str() + " is not rational");
  return coords_[0];
}

std::complex<double> Number::to_complex() const {
  std::complex<double> z = 0.0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / field_;
    z += coords_[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::complex<long double> Number::to_complex_long() const {
  std::complex<long double> z = 0.0L;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const double hi = coords_[j].get_d();
    const Rational rest = coords_[j] - Rational(hi);
    const long double c = static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
    if (j == 0) {
      z += c;
      continue;
    }
    const long double angle = 2.0L * std::numbers::pi_v<long double> * j / field_;
    z += c * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

Number Number::lifted(int n) const {
  n = normalized_order(n);
  if (n == field_) return *this;
  if (n % field_ != 0)
    throw ComputationError("cannot embed Q(zeta_" + std::to_string(field_) + ") into Q(zeta_" +
                           std::to_string(n) + ")");
  check_order(n);
  const int step = n / field_;
  std::vector<Rational> p(std::max<std::size_t>((coords_.size() - 1) * step + 1, totient(n)),
                          Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) p[j * step] = coords_[j];
  reduce_mod_cyclotomic(p, n);
  Number r;
  r.field_ = n;
  r.coords_ = std::move(p);
  return r;  // deliberately not demoted: callers want n-coordinates
}

namespace {
int common_field(int a, int b) {
  int l = std::lcm(a, b);
  check_order(l);
  return l;
}
}  // namespace

Number& Number::operator+=(const Number& o) {
  if (field_ == 1 && o.field_ == 1) {
    coords_[0] += o.coords_[0];
    return *this;
  }
  int n = common_field(field_, o.field_);
  Number a = lifted(n);
  Number b = o.lifted(n);
  for (std::size_t j = 0; j < a.coords_.size(); ++j) a.coords_[j] += b.coords_[j];
  a.demote();
  return *this = std::move(a);
}

Number& Number::operator-=(const Number& o) { return *this += -o; }

Number Number::operator-() const {
  Number r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Number& Number::operator*=(const Number& o) {
  if (o.field_ == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    demote();
    return *this;
  }
  if (field_ == 1) {
    Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    demote();
    return *this;
  }
  int n = common_field(field_, o.field_);
  Number a = lifted(n);
  Number b = o.lifted(n);
  std::vector<Rational> p(a.coords_.size() + b.coords_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) p[i + j] += a.coords_[i] * b.coords_[j];
  }
  reduce_mod_cyclotomic(p, n);
  field_ = n;
  coords_ = std::move(p);
  demote();
  return *this;
}

Number Number::inverse() const {
  if (is_zero()) throw ComputationError("division by zero");
  if (field_ == 1) return Number(Rational(1) / coords_[0]);
  // Solve M x = e_0 where column j of M holds the coordinates of a * zeta^j.
  const int k = static_cast<int>(coords_.size());
  std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1, Rational(0)));
  for (int j = 0; j < k; ++j) {
    Number col = *this * Number::zeta(field_, j);
    Number lc = col.lifted(field_);
    for (int i = 0; i < k; ++i) aug[i][j] = lc.coords_[i];
  }
  aug[0][k] = 1;
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && sgn(aug[piv][c]) == 0) ++piv;
    if (piv == k) throw ComputationError("singular multiplication matrix in cyclotomic inverse");
    std::swap(aug[piv], aug[c]);
    Rational inv = Rational(1) / aug[c][c];
    for (int j = c; j <= k; ++j) aug[c][j] *= inv;
    for (int r = 0; r < k; ++r) {
      if (r == c || sgn(aug[r][c]) == 0) continue;
      Rational f = aug[r][c];
      for (int j = c; j <= k; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  std::vector<Rational> x(k);
  for (int i = 0; i < k; ++i) x[i] = aug[i][k];
  return Number::from_coords(field_, std::move(x));
}

Number& Number::operator/=(const Number& o) {
  if (o.field_ == 1) {
    if (sgn(o.coords_[0]) == 0) throw ComputationError("division by zero");
    for (auto& c : coords_) c /= o.coords_[0];
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Number& a, const Number& b) {
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  if (a.field_ == 1 || b.field_ == 1) return false;  // both demoted
  int n = std::lcm(a.field_, b.field_);
  check_order(n);
  return a.lifted(n).coords_ == b.lifted(n).coords_;
}

std::string Number::str() const {
  if (field_ == 1) return format_rational(coords_[0]);
  std::ostringstream os;
  os << "[n=" << field_ << ":";
  for (std::size_t j = 0; j < coords_.size(); ++j)
    os << (j ? ", " : " ") << format_rational(coords_[j]);
  os << "]";
  return os.str();
}

}  // namespace galois
