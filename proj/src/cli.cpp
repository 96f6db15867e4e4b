#include "logmono/cli.hpp"

#include "logmono/io.hpp"
#include "logmono/selftest.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

namespace logmono::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string file;
  std::vector<Integer> weights;
  Integer winding = 1;
  Integer modulus = 0;
  std::uint64_t seed = 0;
  Integer count = 10;
  std::string p = "trivial", q = "trivial", r = "trivial";
  std::string e = "split", f = "split";
};

void print_json(std::ostream& out, const io::Json& doc) { out << doc.dump(2) << '\n'; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << ' ' << pad(std::to_string(m(i, j)), width);
    out << '\n';
  }
}

std::string monoid_text(const MonoidVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index k = 0; k < v.rank(); ++k) os << (k ? "," : "") << v.coords(k);
  os << ')';
  return os.str();
}

TropicalCurve load_valid_curve(const std::string& path) {
  auto curve = io::read_curve_file(path);
  require_valid(curve);
  return curve;
}

std::vector<Integer> resolve_weights(const Options& o, const TropicalCurve& curve) {
  if (o.weights.empty()) return std::vector<Integer>(static_cast<std::size_t>(curve.base_rank), 1);
  if (static_cast<Integer>(o.weights.size()) != curve.base_rank)
    throw UsageError("--weights: expected " + std::to_string(curve.base_rank) + " values (one per base generator), got " +
                     std::to_string(o.weights.size()));
  for (Integer w : o.weights)
    if (w < 1) throw UsageError("--weights: weights must be positive, got " + std::to_string(w));
  return o.weights;
}

extpan::GroupPtr parse_group_flag(const std::string& flag, const std::string& spec) {
  try {
    return extpan::make_group(extpan::AbelianGroup::parse(spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

extpan::ExtClass resolve_class(const std::string& flag, const std::string& value, const extpan::GroupPtr& source,
                               const extpan::GroupPtr& target) {
  if (value == "split") return extpan::split_class(source, target);
  if (value == "nonsplit") {
    if (extpan::ext1_order(*source, *target) != 2)
      throw UsageError(flag + " nonsplit: Ext1(" + source->describe() + ", " + target->describe() +
                       ") is not cyclic of order 2; pass a cocycle table file instead");
    return extpan::ext1_representatives(source, target).back();
  }
  const extpan::Cocycle c = io::read_cocycle_file(value);
  if (!(c.source() == *source) || !(c.target() == *target))
    throw UsageError(flag + ": cocycle in \"" + value + "\" is not a map " + source->describe() + " x " +
                     source->describe() + " -> " + target->describe());
  return extpan::ExtClass(extpan::Cocycle(source, target, c.table()));
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto curve = io::read_curve_file(o.file);
  const auto violations = validate(curve);
  if (o.format == "json") {
    io::Json doc;
    doc["valid"] = violations.empty();
    doc["violations"] = io::to_json(violations);
    print_json(out, doc);
  } else {
    out << (violations.empty() ? "valid" : "invalid") << '\n';
    for (const auto& v : violations) out << "  " << to_string(v) << '\n';
  }
  return violations.empty() ? kOk : kInvalidInput;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  const auto curve = load_valid_curve(o.file);
  const auto basis = cycle_basis(curve);
  const auto pm = pairing_matrix(curve, basis);
  if (o.format == "json") {
    print_json(out, io::to_json(pm));
    return kOk;
  }
  out << "h = " << pm.h() << ", base_rank = " << pm.base_rank() << '\n';
  for (Eigen::Index i = 0; i < pm.h(); ++i) {
    out << "  " << basis.generators[static_cast<std::size_t>(i)] << ':';
    for (Eigen::Index j = 0; j < pm.h(); ++j) out << ' ' << monoid_text(pm.entry(i, j));
    out << '\n';
  }
  return kOk;
}

int cmd_specialize(const Options& o, std::ostream& out) {
  const auto curve = load_valid_curve(o.file);
  const auto weights = resolve_weights(o, curve);
  const IntMatrix b = specialize(pairing_matrix(curve, cycle_basis(curve)), weights);
  if (o.format == "json") {
    print_json(out, io::int_matrix_json(b));
  } else {
    out << "h = " << b.rows() << '\n';
    print_matrix(out, b);
  }
  return kOk;
}

int cmd_pl(const Options& o, std::ostream& out) {
  if (o.modulus != 0 && o.modulus < 2) throw UsageError("--mod: must be 0 (integers) or at least 2");
  const auto curve = load_valid_curve(o.file);
  const auto weights = resolve_weights(o, curve);
  IntMatrix b = specialize(pairing_matrix(curve, cycle_basis(curve)), weights);
  if (o.modulus != 0) b = reduce_mod(b, o.modulus);
  const auto op = picard_lefschetz(b, curve.abelian_rank(), o.winding, o.modulus);
  if (o.format == "json") {
    print_json(out, io::to_json(op));
  } else {
    out << "modulus = " << op.modulus() << ", h = " << op.h() << ", a = " << op.a() << ", w = " << op.winding() << '\n';
    print_matrix(out, op.matrix());
  }
  return kOk;
}

int cmd_hodge(const Options& o, std::ostream& out) {
  const auto t = hodge_table(load_valid_curve(o.file));
  if (o.format == "json") {
    print_json(out, io::to_json(t));
    return kOk;
  }
  const char* names[] = {"gr_-1", "gr_0", "gr_1"};
  out << "        F0    F1\n";
  for (std::size_t r = 0; r < 3; ++r)
    out << pad(names[r], 6) << pad(std::to_string(t.rows[r][0]), 6) << pad(std::to_string(t.rows[r][1]), 6) << '\n';
  return kOk;
}

int cmd_torsion(const Options& o, std::ostream& out) {
  if (o.modulus < 2) throw UsageError("--mod: torsion level must be at least 2");
  const auto ranks = torsion_dims(load_valid_curve(o.file), o.modulus);
  if (o.format == "json") {
    print_json(out, io::to_json(ranks));
  } else {
    out << "Z/" << ranks.modulus << " ranks: Hom(H,mu_n) " << ranks.toric << ", A[n] " << ranks.abelian << ", H/nH "
        << ranks.discrete << '\n';
  }
  return kOk;
}

int cmd_compgroup(const Options& o, std::ostream& out) {
  const auto curve = load_valid_curve(o.file);
  const auto weights = resolve_weights(o, curve);
  const IntMatrix b = specialize(pairing_matrix(curve, cycle_basis(curve)), weights);
  const auto divisors = component_group(b);
  if (o.format == "json") {
    io::Json doc;
    doc["h"] = b.rows();
    doc["determinant"] = determinant(b);
    doc["positive_definite"] = is_positive_definite(b);
    doc["elementary_divisors"] = divisors;
    print_json(out, doc);
  } else {
    out << "component group: ";
    if (divisors.empty()) out << "0";
    for (std::size_t i = 0; i < divisors.size(); ++i) out << (i ? " + " : "") << "Z/" << divisors[i];
    out << '\n';
  }
  return kOk;
}

int cmd_extpan(const Options& o, std::ostream& out) {
  const auto p = parse_group_flag("--p", o.p);
  const auto q = parse_group_flag("--q", o.q);
  const auto r = parse_group_flag("--r", o.r);
  const auto e = resolve_class("--e", o.e, q, r);
  const auto f = resolve_class("--f", o.f, r, p);
  const auto report = extpan::torsor_report(e, f);
  if (o.format == "json") {
    print_json(out, io::to_json(report));
  } else {
    out << "fiber size        " << report.fiber_size << '\n'
        << "|Ext1(Q,P)|       " << report.ext1_order << '\n'
        << "stabilizer order  " << report.stabilizer_order << '\n'
        << "connecting image  " << report.connecting_image_order << '\n'
        << "transitive        " << (report.transitive ? "yes" : "no") << '\n'
        << "section           " << (report.section_ok ? "ok" : "FAILED") << '\n';
  }
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("--count: must be at least 1");
  const auto report = run_selftest(o.seed, o.count);
  if (o.format == "json") {
    print_json(out, to_json(report));
  } else {
    for (const auto& p : report.properties) {
      out << (p.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << p.name << std::right << p.checked;
      if (!p.passed) out << "  " << p.failure;
      out << '\n';
    }
  }
  return report.all_passed() ? kOk : kInvalidInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic monodromy pairing of degenerating Jacobians"};
  app.name("logmono");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto curve_command = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("curve", o.file, "Curve JSON file")->required();
    commands.emplace_back(sub, h);
    return sub;
  };

  curve_command("validate", "List every invariant violation of a curve", cmd_validate);
  curve_command("pairing", "Monoid-valued monodromy pairing on H1", cmd_pairing);
  curve_command("specialize", "Integer pairing at positive generator weights", cmd_specialize)
      ->add_option("--weights", o.weights, "One positive weight per base generator")
      ->delimiter(',');
  auto* pl = curve_command("pl", "Picard-Lefschetz operator on H^1", cmd_pl);
  pl->add_option("--weights", o.weights, "One positive weight per base generator")->delimiter(',');
  pl->add_option("--winding", o.winding, "Winding datum of the loop");
  pl->add_option("--mod", o.modulus, "0 for integral cohomology, n >= 2 for mu_n coefficients");
  curve_command("hodge", "Hodge filtration dimensions on the weight graded pieces", cmd_hodge);
  curve_command("torsion", "Graded ranks of the n-torsion", cmd_torsion)
      ->add_option("--mod", o.modulus, "Torsion level n >= 2")
      ->required();
  curve_command("compgroup", "Cokernel of the specialized pairing", cmd_compgroup)
      ->add_option("--weights", o.weights, "One positive weight per base generator")
      ->delimiter(',');

  CLI::App* ext = app.add_subcommand("extpan", "Torsor of variegated extensions of E by F");
  ext->add_option("--p", o.p, "P as invariant factors, e.g. 2,4");
  ext->add_option("--q", o.q, "Q as invariant factors");
  ext->add_option("--r", o.r, "R as invariant factors");
  ext->add_option("--e", o.e, "E in Ext1(Q,R): split, nonsplit or a cocycle file");
  ext->add_option("--f", o.f, "F in Ext1(R,P): split, nonsplit or a cocycle file");
  commands.emplace_back(ext, cmd_extpan);

  CLI::App* self = app.add_subcommand("selftest", "Seeded randomized property suites");
  self->add_option("--seed", o.seed, "Random seed");
  self->add_option("--count", o.count, "Instances per property");
  commands.emplace_back(self, cmd_selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return handler(o, out);
    err << "error: no subcommand\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const extpan::BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidCurve& e) {
    err << "error: invalid curve \"" << o.file << "\"\n";
    for (const auto& v : e.violations()) err << "  " << to_string(v) << '\n';
    return kInvalidInput;
  } catch (const DegeneratePairing& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace logmono::cli
