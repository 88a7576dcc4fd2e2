// galois-loci: enumerate, construct and verify Galois centers of projections
// of rational normal curves.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "galois/acceptance.hpp"
#include "galois/errors.hpp"
#include "galois/families.hpp"
#include "galois/json_io.hpp"

using namespace galois;
using io::Json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct Options {
  int degree = 0;
  std::string system;
  std::string group;
  std::string section;
  std::string center;
  std::uint64_t seed = 0;
  double tol_accept = 1e-8;
  double tol_dedupe = 1e-6;
  int samples = 50;
  std::string format;  // json by default, table for selftest
  std::string output;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write to '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void check_options(const Options& o) {
  if (!(o.tol_accept > 0.0) || !(o.tol_dedupe > 0.0)) throw InputError("tolerances must be positive");
  if (o.samples < 1) throw InputError("--samples must be at least 1");
}

OracleConfig oracle_config(const Options& o) { return {o.tol_accept, o.tol_dedupe, o.seed}; }

std::optional<LinearSystem> load_system(const Options& o) {
  if (o.system.empty()) return std::nullopt;
  return io::linear_system_from_json(io::parse_inline_or_file(o.system));
}

void print_warnings(const std::vector<std::string>& ws) {
  for (const auto& w : ws) std::cerr << "warning: " << w << "\n";
}

std::string matrix_rows(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).str();
    os << "]\n";
  }
  return os.str();
}

// ------------------------------------------------------------ subcommands

int cmd_families(const Options& o) {
  auto v = load_system(o);
  if (!v) {
    if (o.degree < 1) throw InputError("--degree must be at least 1");
    v = LinearSystem::complete(o.degree);
  } else if (o.degree != 0 && o.degree != v->degree()) {
    throw InputError("--degree disagrees with the degree of --system");
  }
  const auto records = enumerate_families(*v, {o.samples, o.seed});
  Output out(o.output);
  if (o.format == "table") {
    auto& os = out.stream();
    os << std::left << std::setw(16) << "kind" << std::setw(5) << "m" << std::setw(7) << "fiber"
       << std::setw(6) << "base" << std::setw(7) << "total" << std::setw(10) << "disjoint"
       << "may_vary\n";
    for (const auto& r : records)
      os << std::setw(16) << r.kind.label() << std::setw(5) << r.m << std::setw(7) << r.fiber_dim
         << std::setw(6) << r.base_dim << std::setw(7) << r.total_dim << std::setw(10)
         << (r.disjoint_from_curve ? "yes" : "no") << (r.fiber_dim_may_vary ? "yes" : "no") << "\n";
    return 0;
  }
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(io::to_json(r));
  out.stream() << arr.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const ProjectionCenter center = io::center_from_json(io::parse_inline_or_file(o.center));
  auto v = load_system(o);
  if (!v) v = LinearSystem::complete(center.degree());
  if (v->degree() != center.degree()) throw InputError("center and system differ in degree");
  if (static_cast<int>(center.pencil().cols()) != v->dimension())
    throw InputError("pencil has " + std::to_string(center.pencil().cols()) +
                     " columns but the system has dimension " + std::to_string(v->dimension()));
  const OracleReport rep = is_galois(center, *v, oracle_config(o));
  print_warnings(rep.warnings);
  Output out(o.output);
  if (o.format == "table") {
    auto& os = out.stream();
    os << "galois:       " << (rep.galois ? "yes" : "no") << "\n"
       << "degree:       " << rep.degree << "\n"
       << "deck order:   " << rep.deck_order << "\n"
       << "kind:         " << (rep.kind ? rep.kind->label() : "-") << "\n"
       << "residual max: " << rep.residual_max << "\n"
       << "certified:    " << rep.certified << "\n"
       << "seed:         " << rep.seed << "\n";
    return 0;
  }
  out.stream() << io::to_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_center(const Options& o) {
  if (o.group.empty()) throw InputError("--group is required");
  if (o.section.empty()) throw InputError("--section is required");
  const GroupSpec spec = io::group_spec_from_json(io::parse_inline_or_file(o.group));
  const BinaryForm s = io::form_from_json(io::parse_inline_or_file(o.section));
  auto v = load_system(o);
  const int d = v ? v->degree() : (o.degree > 0 ? o.degree : s.degree() + spec.order());
  if (!v) v = LinearSystem::complete(d);
  if (o.degree > 0 && o.degree != v->degree()) throw InputError("--degree disagrees with --system");
  if (s.degree() + spec.order() != d)
    throw InputError("section degree " + std::to_string(s.degree()) + " does not equal d - |G| = " +
                     std::to_string(d - spec.order()));
  const ProjectionCenter center = family_sample(spec, s, *v);
  const PluckerPoint pl = plucker(center);
  Output out(o.output);
  if (o.format == "table") {
    auto& os = out.stream();
    os << "group:   " << spec.kind.label() << "\n"
       << "degree:  " << d << "\n"
       << "pencil:\n"
       << matrix_rows(center.pencil()) << "plucker:";
    for (const auto& x : pl.minors) os << " " << x.str();
    os << "\n";
    return 0;
  }
  Json j{{"center", io::to_json(center)}, {"plucker", io::to_json(pl)}};
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_selftest(const Options& o) {
  AcceptanceConfig cfg;
  cfg.seed = o.seed;
  cfg.oracle = oracle_config(o);
  cfg.samples = o.samples;
  const auto results = run_acceptance(cfg);
  bool all = true;
  Output out(o.output);
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << std::fixed << std::setprecision(3) << "[" << r.id << "] " << r.seconds << " s";
    if (r.budget_seconds > 0) std::cerr << " (budget " << r.budget_seconds << " s)";
    std::cerr << "\n";
    print_warnings(r.warnings);
    if (o.format == "json")
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      out.stream() << summary_line(r) << "\n";
  }
  if (o.format == "json")
    out.stream() << Json{{"pass", all}, {"criteria", arr}}.dump(2) << "\n";
  else
    out.stream() << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois centers of projections of rational normal curves"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Random seed (GALOIS_LOCI_SEED overrides)");
    cmd->add_option("--tol-accept", o.tol_accept, "Deck candidate acceptance tolerance");
    cmd->add_option("--tol-dedupe", o.tol_dedupe, "Deck element dedupe distance");
    cmd->add_option("--samples", o.samples, "Sample count");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("-o,--output", o.output, "Write to a file instead of stdout");
  };

  auto* fam = app.add_subcommand("families", "List the families of Galois centers for degree d");
  fam->add_option("--degree", o.degree, "Degree d of the curve");
  fam->add_option("--system", o.system, "Linear system JSON (file or inline)");
  common(fam);

  auto* ver = app.add_subcommand("verify", "Decide whether a center is Galois by deck search");
  ver->add_option("center", o.center, "Center JSON (file or inline)")->required();
  ver->add_option("--system", o.system, "Linear system JSON (file or inline)");
  common(ver);

  auto* cen = app.add_subcommand("center", "Build the center of a Galois section");
  cen->add_option("--group", o.group, "Group spec JSON (file or inline)");
  cen->add_option("--section", o.section, "Section form JSON (file or inline)");
  cen->add_option("--degree", o.degree, "Degree d (default: deg s + |G|)");
  cen->add_option("--system", o.system, "Linear system JSON (file or inline)");
  common(cen);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (o.format.empty()) o.format = self->parsed() ? "table" : "json";

  try {
    if (const char* env = std::getenv("GALOIS_LOCI_SEED")) {
      try {
        std::size_t pos = 0;
        o.seed = std::stoull(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::logic_error&) {
        throw InputError(std::string("GALOIS_LOCI_SEED is not an unsigned integer: ") + env);
      }
    }
    check_options(o);
    if (fam->parsed()) return cmd_families(o);
    if (ver->parsed()) return cmd_verify(o);
    if (cen->parsed()) return cmd_center(o);
    return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}
