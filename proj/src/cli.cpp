#include "avsa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "avsa/reports.hpp"

namespace avsa::cli {

namespace {

struct Options {
  std::string algebra;
  std::string module;
  std::string out;
  std::string lambda = "0";
  std::string mode;
  std::string beta = "0";
  std::string example;
  std::string emit;
  std::optional<int> window;
  int inner = 3;
  int order = 3;
  int n = 1;
  int i = 0;
  int p = 2;
  int m = 1;
  bool json_output = false;
};

void emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.json_output) {
    out << r.data.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

int finish(const Report& r, const Options& o, std::ostream& out) {
  emit_report(r, o, out);
  return r.ok ? kOk : kDomainFailure;
}

// Thrown when the algebra or module document fails its relation checks; the
// report carries the witnesses.
struct DomainFailure {
  Report report;
};

SuperalgebraSpec load_algebra(const std::string& path) {
  SuperalgebraSpec g = parse_algebra(read_json_file(path));
  std::vector<Violation> vs = validate_structure(g);
  if (vs.empty()) {
    for (auto& v : validate_derivation(g)) vs.push_back(std::move(v));
    for (auto& v : validate_automorphism(g)) vs.push_back(std::move(v));
  }
  if (!vs.empty()) throw DomainFailure{validation_report(g, vs)};
  return g;
}

GddModule load_module(const std::string& path, const SuperalgebraSpec& g) {
  GddModule v = parse_module(read_json_file(path), g);
  auto vs = validate_module(v);
  if (!vs.empty()) throw DomainFailure{module_violation_report(vs)};
  return v;
}

LoopWindow make_window(const Options& o, const SuperalgebraSpec& g, const GddModule& v, LoopMode mode) {
  return LoopWindow(v, FieldElem::parse(o.lambda, *g.field), *o.window, mode);
}

LoopMode loop_mode(const std::string& s) {
  if (s.empty() || s == "gamma") return LoopMode::Gamma;
  if (s == "f") return LoopMode::F;
  throw InputError("--mode must be gamma or f");
}

OmegaMode omega_mode(const std::string& s) {
  if (s.empty() || s == "vir") return OmegaMode::Vir;
  if (s == "mixed") return OmegaMode::Mixed;
  throw InputError("--mode must be vir or mixed");
}

int cmd_validate(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  return finish(validation_report(g, {}), o, out);
}

int cmd_h2(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  return finish(h2_report(g, h2_summary(g)), o, out);
}

int cmd_extend(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  ExtensionData ext = build_extension(g);
  const std::string doc = extension_to_json(ext).dump(2) + "\n";
  if (o.out.empty()) {
    out << doc;
    return kOk;
  }
  write_text_file(o.out, doc);
  Report r = h2_report(g, ext.dims);
  r.text += "wrote " + o.out + "\n";
  r.data["written"] = o.out;
  return finish(r, o, out);
}

int cmd_jacobi(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  TruncatedAlgebra t = truncate(build_extension(g), *o.window);
  return finish(jacobi_report(t, jacobi_check(t)), o, out);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  OracleReport r = oracle_h2(g, *o.window, o.inner);
  return finish(oracle_report(r, h2_summary(g).total()), o, out);
}

int cmd_module_check(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  GddModule v = load_module(o.module, g);
  LoopWindow l = make_window(o, g, v, loop_mode(o.mode));
  return finish(module_check_report(l, module_axiom_check(l), central_acts_trivially(l)), o, out);
}

int cmd_simple_check(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  GddModule v = load_module(o.module, g);
  return finish(simplicity_report(v, graded_simplicity(v)), o, out);
}

int cmd_omega(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  GddModule v = load_module(o.module, g);
  const OmegaMode mode = omega_mode(o.mode);
  LoopWindow l = make_window(o, g, v, LoopMode::Gamma);
  return finish(omega_report(l, o.order, mode, omega_check(l, o.order, mode)), o, out);
}

int cmd_f_components(const Options& o, std::ostream& out) {
  SuperalgebraSpec g = load_algebra(o.algebra);
  GddModule v = load_module(o.module, g);
  if (!v.grading) throw InputError("f-components needs a module with a 'grading' field");
  LoopWindow l = make_window(o, g, v, LoopMode::Gamma);
  return finish(f_components_report(l, f_components(l)), o, out);
}

ExampleId example_id(const Options& o) {
  ExampleId id{o.example, {}};
  id.params.beta = FieldElem::parse(o.beta, CyclotomicField::get(1)).rational();
  id.params.n = o.n;
  id.params.i = o.i;
  id.params.p = o.p;
  id.params.m = o.m;
  return id;
}

int cmd_example(const Options& o, std::ostream& out) {
  const ExampleId id = example_id(o);
  SuperalgebraSpec g = make_example(id);
  const std::string doc = algebra_to_json(g).dump(2) + "\n";
  if (o.emit.empty()) {
    out << doc;
    return kOk;
  }
  write_text_file(o.emit, doc);
  const ExpectedTable e = expected_h2(id);
  Report r;
  r.text = "example: " + id.label() + "\nexpected total: " + std::to_string(e.total) + "\nwrote " + o.emit + "\n";
  r.data = json{{"example", id.label()}, {"expected_total", e.total}, {"written", o.emit}};
  return finish(r, o, out);
}

int cmd_example_verify(const Options& o, std::ostream& out) {
  std::vector<ExampleCheck> rows;
  for (const ExampleId& id : regression_grid()) {
    rows.push_back({id, expected_h2(id), h2_summary(make_example(id))});
  }
  return finish(example_verify_report(rows), o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Central extensions and loop modules of twisted affine-Virasoro superalgebras", "avsa"};
  app.require_subcommand(1);
  Options o;
  std::map<const CLI::App*, int> window_defaults;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json_output, "Print the JSON report"); };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("algebra", o.algebra, "Algebra file")->required();
    add_json(sub);
  };
  auto add_module = [&](CLI::App* sub, int default_window) {
    window_defaults[sub] = default_window;
    add_algebra(sub);
    sub->add_option("module", o.module, "Module file")->required();
    sub->add_option("--lambda", o.lambda, "Loop module parameter (scalar)");
    sub->add_option("--window", o.window, "Degree bound M (default " + std::to_string(default_window) + ")");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check the algebra, derivation and automorphism");
  add_algebra(validate);
  CLI::App* h2 = app.add_subcommand("h2", "Dimension table of the second cohomology");
  add_algebra(h2);
  CLI::App* extend = app.add_subcommand("extend", "Export the universal central extension");
  add_algebra(extend);
  extend->add_option("--out", o.out, "Output file");
  CLI::App* jacobi = app.add_subcommand("jacobi", "Exhaustive Jacobi check of the truncated extension");
  add_algebra(jacobi);
  jacobi->add_option("--window", o.window, "Degree bound N (default 6)");
  window_defaults[jacobi] = 6;
  CLI::App* oracle = app.add_subcommand("oracle-h2", "Brute-force cocycle count on a truncation");
  add_algebra(oracle);
  oracle->add_option("--window", o.window, "Degree bound N (default 6)");
  window_defaults[oracle] = 6;
  oracle->add_option("--inner", o.inner, "Projection bound (default 3)");
  CLI::App* module_check = app.add_subcommand("module-check", "Check the loop module action on a window");
  add_module(module_check, 5);
  module_check->add_option("--mode", o.mode, "gamma or f")->check(CLI::IsMember({"gamma", "f"}));
  CLI::App* simple = app.add_subcommand("simple-check", "Graded simplicity of the finite module");
  add_algebra(simple);
  simple->add_option("module", o.module, "Module file")->required();
  CLI::App* omega = app.add_subcommand("omega-check", "Vanishing of the differentiators");
  add_module(omega, 5);
  omega->add_option("--mode", o.mode, "vir or mixed")->check(CLI::IsMember({"vir", "mixed"}));
  omega->add_option("--m", o.order, "Differentiator order (default 3)");
  CLI::App* fcomp = app.add_subcommand("f-components", "Split the window into graded components");
  add_module(fcomp, 3);
  CLI::App* example = app.add_subcommand("example", "Write a catalog algebra");
  example->add_option("name", o.example, "Example name")->required();
  example->add_option("--beta", o.beta, "Derivation parameter (rational)");
  example->add_option("--n", o.n, "Twist order");
  example->add_option("--i", o.i, "Twist exponent");
  example->add_option("--p", o.p, "gap_p parameter");
  example->add_option("--m", o.m, "galilean parameter");
  example->add_option("--emit", o.emit, "Output file");
  add_json(example);
  CLI::App* verify = app.add_subcommand("example-verify", "Compare every catalog example with its expected table");
  add_json(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (const auto& [sub, w] : window_defaults) {
    if (*sub && !o.window) o.window = w;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*h2) return cmd_h2(o, out);
    if (*extend) return cmd_extend(o, out);
    if (*jacobi) return cmd_jacobi(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*module_check) return cmd_module_check(o, out);
    if (*simple) return cmd_simple_check(o, out);
    if (*omega) return cmd_omega(o, out);
    if (*fcomp) return cmd_f_components(o, out);
    if (*example) return cmd_example(o, out);
    if (*verify) return cmd_example_verify(o, out);
  } catch (const DomainFailure& f) {
    return finish(f.report, o, out);
  } catch (const ValidationError& e) {
    return finish(module_violation_report(e.violations()), o, out);
  } catch (const ScalarSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace avsa::cli
