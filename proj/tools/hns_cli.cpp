// hns_cli: generate, verify, quotient and compare finite hypercomplex number
// systems built from the folded convolution.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "hns/hns.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr std::size_t max_listed_witnesses = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

hns::FiniteHNS load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw hns::ParseError(path + ": empty file");
  switch (text[first]) {
    case '{': return hns::parse_json(text);
    case '|': return hns::parse_markdown(text);
    default: return hns::parse_csv(text);
  }
}

template <class Witness>
void list_truncated(std::ostream& os, const std::vector<Witness>& ws, auto&& line) {
  for (std::size_t n = 0; n < ws.size() && n < max_listed_witnesses; ++n) os << "  " << line(ws[n]) << "\n";
  if (ws.size() > max_listed_witnesses)
    os << "  ... " << ws.size() - max_listed_witnesses << " more\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const hns::LawWitness<hns::Rational>& w) {
  using hns::to_string;
  std::string what;
  switch (w.law) {
    case hns::AlgebraLaw::unitality:
      what = to_string(w.i) + "." + to_string(w.j) + " is not " + to_string(w.k);
      break;
    case hns::AlgebraLaw::commutativity:
      what = to_string(w.i) + "." + to_string(w.j) + " vs " + to_string(w.j) + "." + to_string(w.i);
      break;
    case hns::AlgebraLaw::associativity:
      what = "(" + to_string(w.i) + "." + to_string(w.j) + ")." + to_string(w.k) + " vs " +
             to_string(w.i) + ".(" + to_string(w.j) + "." + to_string(w.k) + ")";
      break;
  }
  return std::string(hns::to_string(w.law)) + ": " + what + " at " + to_string(w.coordinate) + ": " +
         to_string(w.lhs) + " != " + to_string(w.rhs);
}

std::string describe(const hns::ConditionWitness<hns::Rational>& w) {
  using hns::to_string;
  return std::string(hns::to_string(w.condition)) + ": (i,j,k) = (" + std::to_string(w.i.label()) +
         "," + std::to_string(w.j.label()) + "," + std::to_string(w.k.label()) + ") lhs " +
         to_string(w.lhs) + " rhs " + to_string(w.rhs);
}

struct Options {
  int dim = 0;
  int divisor = 0;
  std::string format = "markdown";
  std::string involution = "identity";
  std::vector<std::string> checks{"laws", "conditions"};
  bool strict = false;
  std::string a, b, out;
  std::int64_t index = 0;
  int cap = hns::default_search_cap;
};

hns::Format format_of(const Options& o) { return *hns::parse_format(o.format); }

int run_generate(const Options& o) {
  emit(hns::serialize(hns::build_quotient_system(o.dim), format_of(o)).payload, o.out);
  return exit_ok;
}

int run_verify(const Options& o) {
  const hns::FiniteHNS sys = hns::build_quotient_system(o.dim);
  const bool laws = std::find(o.checks.begin(), o.checks.end(), "laws") != o.checks.end();
  const bool conditions = std::find(o.checks.begin(), o.checks.end(), "conditions") != o.checks.end();
  std::ostringstream os;
  int code = exit_ok;

  os << "system: G_" << sys.dimension() << "\n";
  os << "canonical: " << yes_no(hns::is_canonical(sys)) << "\n";
  if (laws) {
    const auto r = hns::check_algebra_laws(sys);
    os << "laws: unital=" << yes_no(r.unital) << " commutative=" << yes_no(r.commutative)
       << " associative=" << yes_no(r.associative) << "\n";
    list_truncated(os, r.witnesses, [](const auto& w) { return describe(w); });
    if (!r.all_hold()) code = exit_verification_failed;
  }
  if (conditions) {
    const auto choice = *hns::parse_involution(o.involution);
    const auto r = hns::check_structure_conditions(sys, choice);
    os << "conditions (" << hns::to_string(choice) << " involution): positivity="
       << yes_no(r.positivity_holds) << " unit_diagonal=" << yes_no(r.unit_diagonal_holds)
       << " adjoint_symmetry=" << yes_no(r.adjoint_symmetry_holds) << "\n";
    list_truncated(os, r.failure_witnesses, [](const auto& w) { return describe(w); });
    if (!r.all_hold()) {
      os << (o.strict ? "conditions failed (strict)\n" : "condition failures reported as findings\n");
      if (o.strict) code = exit_verification_failed;
    }
  }
  emit(os.str(), o.out);
  return code;
}

int run_quotient(const Options& o) {
  const hns::FiniteHNS sys = hns::build_quotient_system(o.dim);
  const auto partition = hns::divisor_partition(o.dim, o.divisor);
  const auto check = hns::verify_congruence(sys, partition);
  if (!check) {
    std::cerr << "quotient: partition of G_" << o.dim << " by divisor " << o.divisor
              << " is not a congruence: " << hns::describe(*check.witness) << "\n";
    return exit_verification_failed;
  }
  emit(hns::serialize(hns::quotient_system(sys, partition), format_of(o)).payload, o.out);
  return exit_ok;
}

int run_iso(const Options& o) {
  const hns::FiniteHNS a = load_system(o.a);
  const hns::FiniteHNS b = load_system(o.b);
  if (a.dimension() != b.dimension()) {
    emit("none\n", o.out);
    std::cerr << "iso: dimensions differ (" << a.dimension() << " vs " << b.dimension() << ")\n";
    return exit_verification_failed;
  }
  const auto p = hns::find_permutation_isomorphism(a, b, o.cap);
  emit(p ? hns::to_string(*p) + "\n" : "none\n", o.out);
  return p ? exit_ok : exit_verification_failed;
}

int run_project(const Options& o) {
  emit(hns::to_string(hns::project_index(o.index, o.dim)) + "\n", o.out);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hypercomplex number systems from the folded convolution"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"markdown", "csv", "json"};
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output path (default stdout)"); };

  auto* generate = app.add_subcommand("generate", "Emit the multiplication table of G_M");
  generate->add_option("--dim", o.dim, "Dimension M")->required()->check(CLI::PositiveNumber);
  generate->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_out(generate);

  auto* verify = app.add_subcommand("verify", "Check algebra laws and structure conditions of G_M");
  verify->add_option("--dim", o.dim, "Dimension M")->required()->check(CLI::PositiveNumber);
  verify->add_option("--checks", o.checks, "Comma-separated: laws,conditions")
      ->delimiter(',')
      ->check(CLI::IsMember({"laws", "conditions"}));
  verify->add_option("--involution", o.involution)->check(CLI::IsMember({"identity", "reflection"}));
  verify->add_flag("--strict", o.strict, "Fail on structure-condition violations");
  add_out(verify);

  auto* quotient = app.add_subcommand("quotient", "Quotient G_M by the divisor partition i ~ i mod d");
  quotient->add_option("--dim", o.dim, "Dimension M")->required()->check(CLI::PositiveNumber);
  quotient->add_option("--divisor", o.divisor, "Divisor d of M")->required()->check(CLI::PositiveNumber);
  quotient->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_out(quotient);

  auto* iso = app.add_subcommand("iso", "Search a unit-fixing permutation isomorphism between two tables");
  iso->add_option("--a", o.a, "First table (json, csv or markdown)")->required();
  iso->add_option("--b", o.b, "Second table")->required();
  iso->add_option("--cap", o.cap, "Largest dimension searched")->check(CLI::PositiveNumber);
  add_out(iso);

  auto* project = app.add_subcommand("project", "Basis element of G_M holding Gamma index n");
  project->add_option("--index", o.index, "Nonnegative index n")->required()->check(CLI::NonNegativeNumber);
  project->add_option("--dim", o.dim, "Dimension M")->required()->check(CLI::PositiveNumber);
  add_out(project);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*generate) return run_generate(o);
    if (*verify) return run_verify(o);
    if (*quotient) return run_quotient(o);
    if (*iso) return run_iso(o);
    if (*project) return run_project(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const hns::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
