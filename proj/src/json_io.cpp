#include "galois/json_io.hpp"

#include <fstream>
#include <sstream>

#include "galois/errors.hpp"

namespace galois::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) fail(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const Number& x) {
  if (x.is_rational()) return format_rational(x.to_rational());
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(format_rational(c));
  return Json{{"n", x.field()}, {"coords", coords}};
}

Number number_from_json(const Json& j) {
  if (j.is_string()) return Number(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Number(j.get<long>());
  if (j.is_object()) {
    int n = int_field(j, "n");
    const Json& cs = field(j, "coords");
    if (!cs.is_array()) fail("cyclotomic 'coords' must be an array");
    if (n < 1 || n > kMaxCyclotomicOrder) fail("unsupported cyclotomic order " + std::to_string(n));
    std::vector<Rational> coords;
    for (const auto& c : cs) coords.push_back(number_from_json(c).to_rational());
    return Number::from_coords(n, std::move(coords));
  }
  fail("a number must be a \"p/q\" string, an integer, or a cyclotomic object");
}

Json to_json(const BinaryForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const Json& j) {
  int d = int_field(j, "degree");
  const Json& cs = field(j, "coeffs");
  if (d < 0 || !cs.is_array() || cs.size() != static_cast<std::size_t>(d + 1))
    fail("form needs degree >= 0 and exactly degree + 1 coefficients");
  std::vector<Number> coeffs;
  for (const auto& c : cs) coeffs.push_back(number_from_json(c));
  return BinaryForm(std::move(coeffs));
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    fail("a matrix must be a non-empty array of non-empty rows");
  std::vector<Vector> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j[0].size()) fail("ragged matrix");
    Vector v;
    for (const auto& x : row) v.push_back(number_from_json(x));
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows);
}

Json to_json(const GroupSpec& spec) {
  Json j{{"kind", spec.kind.name()}};
  if (spec.kind.param() > 0) j["m"] = spec.kind.param();
  j["theta"] = to_json(spec.theta.matrix());
  return j;
}

GroupSpec group_spec_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) fail("group 'kind' must be a string");
  std::string name = k.get<std::string>();
  int m = 0;
  if (name == "cyclic" || name == "dihedral") m = int_field(j, "m");
  GroupSpec spec{GroupKind::from_name(name, m), MoebiusElement::identity()};
  if (j.contains("theta")) spec.theta = MoebiusElement(matrix_from_json(j.at("theta")));
  return spec;
}

Json to_json(const LinearSystem& v) {
  Json basis = Json::array();
  for (const auto& f : v.basis()) basis.push_back(to_json(f));
  return Json{{"degree", v.degree()}, {"basis", basis}};
}

LinearSystem linear_system_from_json(const Json& j) {
  int d = int_field(j, "degree");
  const Json& b = field(j, "basis");
  if (!b.is_array()) fail("'basis' must be an array of forms");
  std::vector<BinaryForm> basis;
  for (const auto& f : b) basis.push_back(form_from_json(f));
  return LinearSystem(d, std::move(basis));
}

Json to_json(const ProjectionCenter& c) {
  return Json{{"d", c.degree()}, {"pencil", to_json(c.pencil())}};
}

ProjectionCenter center_from_json(const Json& j) {
  return ProjectionCenter(int_field(j, "d"), matrix_from_json(field(j, "pencil")));
}

Json to_json(const PluckerPoint& p) {
  // C(n, 2) = minors.size() determines n.
  int n = 2;
  while (n * (n - 1) / 2 < static_cast<int>(p.minors.size())) ++n;
  Json idx = Json::array();
  for (auto [i, j] : PluckerPoint::index_pairs(n)) idx.push_back({i, j});
  Json minors = Json::array();
  for (const auto& x : p.minors) minors.push_back(to_json(x));
  return Json{{"indices", idx}, {"minors", minors}};
}

Json to_json(const InvariantPair& pair) { return Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}}; }

Json to_json(const OracleReport& r) {
  Json j{{"galois", r.galois}, {"degree", r.degree}, {"deck_order", r.deck_order}};
  if (r.kind) j["kind"] = r.kind->label();
  j["residual_max"] = r.residual_max;
  j["seed"] = r.seed;
  j["certified"] = r.certified;
  return j;
}

Json to_json(const FamilyRecord& r) {
  Json j{{"kind", r.kind.name()},
         {"label", r.kind.label()},
         {"m", r.m},
         {"fiber_dim", r.fiber_dim},
         {"base_dim", r.base_dim},
         {"total_dim", r.total_dim},
         {"disjoint_from_curve", r.disjoint_from_curve},
         {"fiber_dim_may_vary", r.fiber_dim_may_vary}};
  if (!r.sampled_fiber_dims.empty()) j["sampled_fiber_dims"] = r.sampled_fiber_dims;
  return j;
}

Json to_json(const IntermediateReport& r) {
  return Json{{"product", to_json(r.product)},
              {"pencil", to_json(r.pencil)},
              {"identity_holds", r.identity_holds},
              {"intermediate_disjoint", r.intermediate_disjoint}};
}

Json parse_inline_or_file(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  std::ifstream in(text);
  if (!in) fail("'" + text + "' is neither valid JSON nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  j = Json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) fail("file '" + text + "' does not contain valid JSON");
  return j;
}

}  // namespace galois::io
