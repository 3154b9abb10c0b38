#include "avsa/reports.hpp"

#include <sstream>

namespace avsa {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

const char* summand_name(int kind) {
  switch (kind) {
    case -1:
      return "n_-1";
    case 0:
      return "n_0";
    default:
      return "n_1";
  }
}

const char* kind_name(CentralKind k) {
  switch (k) {
    case CentralKind::Virasoro:
      return "virasoro";
    case CentralKind::Functional:
      return "functional";
    case CentralKind::Form:
      return "form";
    case CentralKind::Cocycle:
      return "cocycle";
  }
  return "virasoro";
}

json violation_json(const Violation& v) { return json{{"check", v.check}, {"witness", v.witness}, {"detail", v.detail}}; }

json dims_json(const DimensionTable& d) {
  json rows = json::array();
  for (int kind = -1; kind <= 1; ++kind) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      rows.push_back(json{{"summand", summand_name(kind)}, {"parity", parity_name(p)}, {"dim", d.at(kind, p)}});
    }
  }
  return json{{"rows", rows}, {"coboundary_overlap", d.coboundary_overlap}, {"total", d.total()}};
}

void dims_text(std::ostream& os, const DimensionTable& d) {
  os << "summand  parity  dim\n";
  for (int kind = -1; kind <= 1; ++kind) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      std::string s = summand_name(kind);
      s.resize(9, ' ');
      std::string par = parity_name(p);
      par.resize(8, ' ');
      os << s << par << d.at(kind, p) << "\n";
    }
  }
}

json nonzero_entries(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out.push_back(json{{"i", r + 1}, {"j", c + 1}, {"value", render_scalar(m(r, c))}});
    }
  }
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const FieldElem& x : v) out.push_back(render_scalar(x));
  return out;
}

std::string basis_text(const LoopWindow& l, const ModuleBasis& b) { return l.name(b); }

json module_vector_json(const LoopWindow& l, const ModuleVector& x) {
  json out = json::array();
  for (const auto& [b, c] : x) out.push_back(json{{"vector", l.name(b)}, {"coeff", render_scalar(c)}});
  return out;
}

template <class Map, class Namer>
std::string render_sum(const Map& x, Namer name) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (c == FieldElem(1)) {
      os << name(key);
    } else {
      os << "(" << render_scalar(c) << ")*" << name(key);
    }
  }
  return os.str();
}

}  // namespace

std::string render_module_vector(const LoopWindow& l, const ModuleVector& x) {
  return render_sum(x, [&](const ModuleBasis& b) { return l.name(b); });
}

std::string render_element(const TruncatedAlgebra& t, const AlgElement& x) {
  return render_sum(x, [&](std::size_t idx) { return t.name(idx); });
}

Report validation_report(const SuperalgebraSpec& g, const std::vector<Violation>& violations) {
  Report rep;
  rep.ok = violations.empty();
  std::ostringstream os;
  os << "algebra: " << g.name << " (dim " << g.dim << ")\n";
  json vs = json::array();
  for (const auto& v : violations) {
    os << "violation: " << describe(v) << "\n";
    vs.push_back(violation_json(v));
  }
  os << (rep.ok ? "valid" : "invalid") << "\n";
  rep.text = os.str();
  rep.data = json{{"algebra", g.name}, {"dim", g.dim}, {"valid", rep.ok}, {"violations", vs}};
  return rep;
}

Report h2_report(const SuperalgebraSpec& g, const DimensionTable& dims) {
  Report rep;
  std::ostringstream os;
  os << "algebra: " << g.name << "\n";
  dims_text(os, dims);
  os << "coboundary overlap: " << dims.coboundary_overlap << "\n";
  os << "total: " << dims.total() << "\n";
  rep.text = os.str();
  rep.data = dims_json(dims);
  rep.data["algebra"] = g.name;
  rep.ok = dims.coboundary_overlap == 0;
  return rep;
}

json extension_to_json(const ExtensionData& ext) {
  json labels = json::array();
  for (const CentralLabel& l : ext.labels) {
    json entry{{"name", l.name}, {"kind", kind_name(l.kind)}, {"parity", parity_name(l.parity)}};
    const std::size_t slot = parity_slot(l.parity);
    switch (l.kind) {
      case CentralKind::Virasoro:
        entry["values"] = json{{"l_i,l_-i", "(i^3-i)/12"}};
        break;
      case CentralKind::Functional:
        entry["values"] = vector_json(ext.rho[slot].vectors[l.index]);
        break;
      case CentralKind::Form:
        entry["values"] = nonzero_entries(ext.forms[slot].vectors[l.index]);
        break;
      case CentralKind::Cocycle:
        entry["values"] = nonzero_entries(ext.cocycles[slot].vectors[l.index]);
        break;
    }
    labels.push_back(entry);
  }
  json doc{{"algebra", algebra_to_json(ext.spec)}, {"dimensions", dims_json(ext.dims)}, {"central_labels", labels}};
  for (std::size_t s = 0; s < 2; ++s) {
    const InvFormBasis& f = ext.forms[s];
    if (f.has_distinguished) doc["distinguished_form"] = nonzero_entries(f.distinguished);
  }
  doc["partial_index"] = ext.gdd.partial_index + 1;
  return doc;
}

Report jacobi_report(const TruncatedAlgebra& t, const JacobiReport& r) {
  Report rep;
  rep.ok = r.pass();
  std::ostringstream os;
  const auto vir = t.count(Label::Kind::Vir), loop = t.count(Label::Kind::Loop), cen = t.count(Label::Kind::Central);
  os << "window: " << t.window() << "\n";
  os << "labels: " << r.labels << " (virasoro " << vir << ", loop " << loop << ", central " << cen << ")\n";
  os << "admissible triples: " << r.admissible_triples << "\n";
  os << "result: " << (rep.ok ? "pass" : "fail") << "\n";
  json ws = json::array();
  for (std::size_t k = 0; k < r.witnesses.size() && k < kMaxWitnesses; ++k) {
    const auto& w = r.witnesses[k];
    const std::string defect = render_element(t, w.defect);
    os << "witness (" << t.name(w.u) << ", " << t.name(w.v) << ", " << t.name(w.w) << "): " << defect << "\n";
    ws.push_back(json{{"triple", {t.name(w.u), t.name(w.v), t.name(w.w)}}, {"defect", defect}});
  }
  if (r.witnesses.size() > kMaxWitnesses) os << "(" << r.witnesses.size() - kMaxWitnesses << " more witnesses)\n";
  rep.text = os.str();
  rep.data = json{{"window", t.window()},
                  {"labels", r.labels},
                  {"virasoro_labels", vir},
                  {"loop_labels", loop},
                  {"central_labels", cen},
                  {"admissible_triples", r.admissible_triples},
                  {"pass", rep.ok},
                  {"witness_count", r.witnesses.size()},
                  {"witnesses", ws}};
  return rep;
}

Report oracle_report(const OracleReport& r, std::size_t theorem_total) {
  Report rep;
  rep.ok = r.projected_dim == theorem_total;
  std::ostringstream os;
  os << "oracle=" << r.projected_dim << " theorem=" << theorem_total << " " << (rep.ok ? "agree" : "disagree") << "\n";
  os << "window: " << r.window << "\n";
  os << "inner: " << r.inner << "\n";
  os << "labels: " << r.labels << "\n";
  os << "unknowns: " << r.unknowns << "\n";
  os << "equations: " << r.equations << "\n";
  os << "raw dim: " << r.raw_dim << "\n";
  os << "projected dim: " << r.projected_dim << "\n";
  rep.text = os.str();
  rep.data = json{{"oracle", r.projected_dim}, {"theorem", theorem_total}, {"agree", rep.ok},
                  {"window", r.window},        {"inner", r.inner},          {"labels", r.labels},
                  {"unknowns", r.unknowns},    {"equations", r.equations},  {"raw_dim", r.raw_dim},
                  {"projected_dim", r.projected_dim}};
  return rep;
}

Report module_violation_report(const std::vector<Violation>& violations) {
  Report rep;
  rep.ok = violations.empty();
  std::ostringstream os;
  json vs = json::array();
  for (const auto& v : violations) {
    os << "violation: " << describe(v) << "\n";
    vs.push_back(violation_json(v));
  }
  os << (rep.ok ? "valid module" : "invalid module") << "\n";
  rep.text = os.str();
  rep.data = json{{"valid", rep.ok}, {"violations", vs}};
  return rep;
}

Report module_check_report(const LoopWindow& l, const ModuleCheckReport& r, bool central_trivial) {
  Report rep;
  rep.ok = r.pass() && central_trivial;
  const TruncatedAlgebra& t = l.algebra();
  std::ostringstream os;
  os << "mode: " << (l.mode() == LoopMode::Gamma ? "gamma" : "f") << "\n";
  os << "lambda: " << render_scalar(l.lambda()) << "\n";
  os << "window: " << l.window() << "\n";
  os << "module vectors: " << l.basis().size() << "\n";
  os << "algebra labels: " << t.size() << "\n";
  os << "checked: " << r.checked << "\n";
  os << "central labels act as zero: " << (central_trivial ? "yes" : "no") << "\n";
  os << "result: " << (rep.ok ? "pass" : "fail") << "\n";
  json ws = json::array();
  for (std::size_t k = 0; k < r.witnesses.size() && k < kMaxWitnesses; ++k) {
    const auto& w = r.witnesses[k];
    const std::string defect = render_module_vector(l, w.defect);
    os << "witness (" << t.name(w.u1) << ", " << t.name(w.u2) << ", " << basis_text(l, w.w) << "): " << defect << "\n";
    ws.push_back(json{{"pair", {t.name(w.u1), t.name(w.u2)}},
                      {"vector", basis_text(l, w.w)},
                      {"defect", module_vector_json(l, w.defect)}});
  }
  rep.text = os.str();
  rep.data = json{{"mode", l.mode() == LoopMode::Gamma ? "gamma" : "f"},
                  {"lambda", render_scalar(l.lambda())},
                  {"window", l.window()},
                  {"module_vectors", l.basis().size()},
                  {"algebra_labels", t.size()},
                  {"checked", r.checked},
                  {"central_trivial", central_trivial},
                  {"pass", rep.ok},
                  {"witness_count", r.witnesses.size()},
                  {"witnesses", ws}};
  return rep;
}

Report simplicity_report(const GddModule& v, const SimplicityReport& r) {
  Report rep;
  rep.ok = r.verdict == Simplicity::Simple;
  std::ostringstream os;
  os << "dim: " << v.dim << "\n";
  os << "generated algebra dim: " << r.algebra_dim << " of " << v.dim * v.dim << "\n";
  os << "verdict: " << simplicity_name(r.verdict) << "\n";
  json w = json::array();
  for (const Vector& b : r.witness) {
    os << "invariant subspace vector: [";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << render_scalar(b[i]);
    os << "]\n";
    w.push_back(vector_json(b));
  }
  rep.text = os.str();
  rep.data = json{{"dim", v.dim},
                  {"algebra_dim", r.algebra_dim},
                  {"full_dim", v.dim * v.dim},
                  {"verdict", simplicity_name(r.verdict)},
                  {"witness", w}};
  return rep;
}

Report omega_report(const LoopWindow& l, int m, OmegaMode mode, const OmegaReport& r) {
  Report rep;
  rep.ok = r.pass();
  const char* mode_name = mode == OmegaMode::Vir ? "vir" : "mixed";
  std::ostringstream os;
  os << "mode: " << mode_name << "\n";
  os << "order: " << m << "\n";
  os << "lambda: " << render_scalar(l.lambda()) << "\n";
  os << "window: " << l.window() << "\n";
  os << "evaluations: " << r.evaluations << "\n";
  os << "result: " << (rep.ok ? "pass" : "fail") << "\n";
  json ws = json::array();
  for (std::size_t k = 0; k < r.witnesses.size() && k < kMaxWitnesses; ++k) {
    const auto& w = r.witnesses[k];
    std::ostringstream params;
    if (mode == OmegaMode::Vir) {
      params << "k=" << w.params[0] << ", s=" << w.params[1];
    } else {
      params << "x=" << l.algebra().name(*l.algebra().find(Label::loop(static_cast<std::size_t>(w.params[0]), w.params[1])))
             << ", p=" << w.params[2];
    }
    const std::string value = render_module_vector(l, w.value);
    os << "witness (" << params.str() << ", " << basis_text(l, w.w) << "): " << value << "\n";
    ws.push_back(json{{"params", params.str()}, {"vector", basis_text(l, w.w)}, {"value", module_vector_json(l, w.value)}});
  }
  if (r.evaluations == 0) os << "no evaluation fits in the window\n";
  rep.text = os.str();
  rep.data = json{{"mode", mode_name},        {"order", m},
                  {"lambda", render_scalar(l.lambda())},
                  {"window", l.window()},     {"evaluations", r.evaluations},
                  {"pass", rep.ok},           {"witness_count", r.witnesses.size()},
                  {"witnesses", ws}};
  return rep;
}

Report f_components_report(const LoopWindow& l, const std::vector<ComponentInfo>& comps) {
  Report rep;
  std::ostringstream os;
  json cs = json::array();
  std::size_t total = 0;
  std::size_t bound = 0;
  {
    std::map<int, std::size_t> per_residue;
    for (int r : *l.module().grading) ++per_residue[r];
    for (const auto& [r, c] : per_residue) bound = std::max(bound, c);
  }
  os << "components: " << comps.size() << "\n";
  os << "weight multiplicity bound: " << bound << "\n";
  for (const ComponentInfo& c : comps) {
    std::size_t maxw = 0;
    for (const auto& [k, mult] : c.weights) maxw = std::max(maxw, mult);
    total += c.vectors.size();
    rep.ok = rep.ok && c.closed && maxw <= bound;
    os << "M_" << c.index << ": vectors " << c.vectors.size() << ", weights " << c.weights.size()
       << ", max multiplicity " << maxw << ", " << (c.closed ? "closed" : "not closed") << "\n";
    json weights = json::array();
    for (const auto& [k, mult] : c.weights) {
      weights.push_back(json{{"weight", render_scalar(l.lambda() + FieldElem(make_q(k, l.n())))}, {"multiplicity", mult}});
    }
    cs.push_back(json{{"index", c.index},
                      {"vectors", c.vectors.size()},
                      {"max_multiplicity", maxw},
                      {"closed", c.closed},
                      {"weights", weights}});
  }
  rep.ok = rep.ok && total == l.basis().size();
  os << "window vectors: " << l.basis().size() << " (covered " << total << ")\n";
  os << "result: " << (rep.ok ? "pass" : "fail") << "\n";
  rep.text = os.str();
  rep.data = json{{"components", cs}, {"window_vectors", l.basis().size()}, {"covered", total},
                  {"multiplicity_bound", bound}, {"pass", rep.ok}};
  return rep;
}

Report example_verify_report(const std::vector<ExampleCheck>& rows) {
  Report rep;
  std::ostringstream os;
  json out = json::array();
  std::size_t passed = 0;
  for (const ExampleCheck& r : rows) {
    const bool ok = r.expected.dims == r.computed && r.expected.total == r.computed.total();
    passed += ok ? 1 : 0;
    rep.ok = rep.ok && ok;
    os << (ok ? "PASS " : "FAIL ") << r.id.label() << " expected " << r.expected.total << " computed "
       << r.computed.total() << "\n";
    if (!ok) {
      for (int kind = -1; kind <= 1; ++kind) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
          if (r.expected.dims.at(kind, p) != r.computed.at(kind, p)) {
            os << "  " << summand_name(kind) << " " << parity_name(p) << ": expected " << r.expected.dims.at(kind, p)
               << " computed " << r.computed.at(kind, p) << "\n";
          }
        }
      }
    }
    if (!r.expected.note.empty()) os << "  note: " << r.expected.note << "\n";
    json e{{"example", r.id.label()},
           {"expected_total", r.expected.total},
           {"computed_total", r.computed.total()},
           {"expected", dims_json(r.expected.dims)},
           {"computed", dims_json(r.computed)},
           {"pass", ok}};
    if (!r.expected.note.empty()) e["note"] = r.expected.note;
    out.push_back(e);
  }
  os << passed << "/" << rows.size() << " examples match\n";
  rep.text = os.str();
  rep.data = json{{"examples", out}, {"passed", passed}, {"total", rows.size()}, {"pass", rep.ok}};
  return rep;
}

}  // namespace avsa
