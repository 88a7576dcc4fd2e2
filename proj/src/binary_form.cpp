#include "galois/binary_form.hpp"

#include <sstream>

#include "galois/errors.hpp"

namespace galois {

namespace {

// Dense univariate polynomials, index = power. A form's coefficient vector
// read as a polynomial in u = y / x; vanishing at [0:1] (a factor x) shows up
// as a drop in u-degree and is tracked separately.
using Poly = std::vector<Number>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0].is_zero(); }

int poly_degree(const Poly& p) { return poly_is_zero(p) ? -1 : static_cast<int>(p.size()) - 1; }

// a = q b + r with deg r < deg b; b nonzero and trimmed.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  const int db = poly_degree(b);
  const int da = poly_degree(a);
  if (da < db) return {Poly{Number(0)}, a};
  Number inv = b[db].inverse();
  Poly q(da - db + 1, Number(0));
  for (int k = da; k >= db; --k) {
    if (a[k].is_zero()) continue;
    Number c = a[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j)
      if (!b[j].is_zero()) a[k - db + j] -= c * b[j];
  }
  a.resize(std::max(db, 1), Number(0));
  trim(a);
  trim(q);
  return {q, a};
}

void make_monic(Poly& p) {
  trim(p);
  if (poly_is_zero(p)) return;
  Number inv = p.back().inverse();
  for (auto& c : p) c *= inv;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  make_monic(a);
  make_monic(b);
  while (!poly_is_zero(b)) {
    Poly r = poly_divmod(a, b).second;
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Number of trailing zero coefficients, i.e. the power of x dividing f.
int x_multiplicity(const BinaryForm& f) {
  int k = 0;
  for (int i = f.degree(); i >= 0 && f[i].is_zero(); --i) ++k;
  return k;
}

std::string monomial_str(int xp, int yp) {
  std::string s;
  auto part = [&](const char* v, int p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (p > 1) s += "^" + std::to_string(p);
  };
  part("x", xp);
  part("y", yp);
  return s;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Number> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("a binary form needs at least one coefficient");
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw InputError("negative form degree");
  return BinaryForm(std::vector<Number>(degree + 1, Number(0)));
}

BinaryForm BinaryForm::monomial(int degree, int y_power, Number c) {
  if (y_power < 0 || y_power > degree) throw InputError("monomial exponent out of range");
  BinaryForm f = zero(degree);
  f.coeffs_[y_power] = std::move(c);
  return f;
}

bool BinaryForm::is_zero() const { return leading_index() < 0; }

int BinaryForm::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree() != degree()) throw InputError("adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm& BinaryForm::operator*=(const Number& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return form_mul(a, b); }

std::string BinaryForm::str() const {
  const int d = degree();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const Number& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mono = monomial_str(d - i, i);
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.to_rational();
      negative = sgn(q) < 0;
      if (negative) q = -q;
      if (q != 1 || mono.empty()) cs = q.get_str();
    } else {
      cs = "(" + c.str() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << cs << (!cs.empty() && !mono.empty() ? "*" : "") << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g) {
  std::vector<Number> c(f.degree() + g.degree() + 1, Number(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j)
      if (!g[j].is_zero()) c[i + j] += f[i] * g[j];
  }
  return BinaryForm(std::move(c));
}

BinaryForm form_pow(const BinaryForm& f, int k) {
  if (k < 0) throw InputError("negative power of a form");
  BinaryForm r = BinaryForm::constant(1);
  BinaryForm base = f;
  while (k > 0) {
    if (k & 1) r = form_mul(r, base);
    k >>= 1;
    if (k) base = form_mul(base, base);
  }
  return r;
}

BinaryForm normalized(const BinaryForm& f) {
  int lead = f.leading_index();
  if (lead < 0) return f;
  return f * f[lead].inverse();
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz && gz) throw InputError("gcd of two zero forms is undefined");
  if (fz) return normalized(g);
  if (gz) return normalized(f);
  const int kx = std::min(x_multiplicity(f), x_multiplicity(g));
  Poly h = poly_gcd(Poly(f.coeffs().begin(), f.coeffs().end()),
                    Poly(g.coeffs().begin(), g.coeffs().end()));
  h.resize(h.size() + kx, Number(0));
  return normalized(BinaryForm(std::move(h)));
}

BinaryForm form_compose(const BinaryForm& f, const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InputError("form_compose expects a 2x2 matrix");
  if (m.det2().is_zero()) throw InputError("form_compose with a singular matrix");
  const BinaryForm l1({m(0, 0), m(0, 1)});
  const BinaryForm l2({m(1, 0), m(1, 1)});
  // h_k = sum_{i<=k} c_i l1^(k-i) l2^i via h_k = h_{k-1} l1 + c_k l2^k.
  BinaryForm h = BinaryForm::constant(f[0]);
  BinaryForm l2_pow = BinaryForm::constant(1);
  for (int k = 1; k <= f.degree(); ++k) {
    l2_pow = form_mul(l2_pow, l2);
    h = form_mul(h, l1);
    if (!f[k].is_zero()) h += l2_pow * f[k];
  }
  return h;
}

std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw InputError("division by the zero form");
  const int dq = f.degree() - g.degree();
  if (dq < 0) return std::nullopt;
  if (f.is_zero()) return BinaryForm::zero(dq);
  Poly gp(g.coeffs().begin(), g.coeffs().end());
  trim(gp);
  auto [q, r] = poly_divmod(Poly(f.coeffs().begin(), f.coeffs().end()), gp);
  if (!poly_is_zero(r)) return std::nullopt;
  if (poly_degree(q) > dq) return std::nullopt;
  q.resize(dq + 1, Number(0));
  return BinaryForm(std::move(q));
}

BinaryForm form_partial_x(const BinaryForm& f) {
  const int d = f.degree();
  if (d == 0) return BinaryForm::zero(0);
  std::vector<Number> c(d, Number(0));
  for (int i = 0; i < d; ++i) c[i] = f[i] * Number(d - i);
  return BinaryForm(std::move(c));
}

BinaryForm form_partial_y(const BinaryForm& f) {
  const int d = f.degree();
  if (d == 0) return BinaryForm::zero(0);
  std::vector<Number> c(d, Number(0));
  for (int i = 1; i <= d; ++i) c[i - 1] = f[i] * Number(i);
  return BinaryForm(std::move(c));
}

bool proportional(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree() || f.is_zero() || g.is_zero()) return false;
  return normalized(f) == normalized(g);
}

Matrix multiplication_matrix(const BinaryForm& s, int m) {
  const int d = s.degree() + m;
  Matrix out(d + 1, m + 1);
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= s.degree(); ++i) out(i + j, j) = s[i];
  return out;
}

Matrix coefficient_matrix(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) return Matrix();
  Matrix m(forms.size(), forms[0].degree() + 1);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].degree() != forms[0].degree())
      throw InputError("coefficient_matrix needs forms of one degree");
    for (int c = 0; c <= forms[r].degree(); ++c) m(r, c) = forms[r][c];
  }
  return m;
}

}  // namespace galois
