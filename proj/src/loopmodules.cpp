#include "avsa/loopmodules.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace avsa {

Matrix GddModule::action_of(const Vector& x) const {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out += actions[i] * x[i];
  }
  return out;
}

namespace {

long mod_n(long k, int n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

Matrix commutator(const Matrix& a, const Matrix& b, int sign) {
  Matrix ab = a * b;
  Matrix ba = b * a;
  return ab - ba * FieldElem(sign);
}

// Nonzero entries of m outside the blocks allowed by `allowed(row, col)`.
template <class Pred>
bool respects(const Matrix& m, Pred allowed) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !allowed(r, c)) return false;
    }
  }
  return true;
}

}  // namespace

GddModule parse_module(const json& doc, const SuperalgebraSpec& g) {
  if (!doc.is_object()) throw InputError("module document must be a JSON object");
  GddModule v;
  v.algebra = g;
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() || doc.at("dim").get<long>() < 1) {
    throw InputError("module field 'dim' must be a positive integer");
  }
  v.dim = static_cast<std::size_t>(doc.at("dim").get<long>());
  if (!doc.contains("parity")) throw InputError("missing field 'parity'");
  v.parity = parity_from_json(doc.at("parity"), v.dim, "parity");
  if (!doc.contains("partial")) throw InputError("missing field 'partial'");
  v.partial = matrix_from_json(doc.at("partial"), v.dim, v.dim, *g.field, "partial");
  const json empty = json::array();
  const json& acts = doc.contains("action") ? doc.at("action") : empty;
  if (!acts.is_array() || acts.size() != g.dim) {
    throw InputError("'action' must list one matrix per algebra basis element (" + std::to_string(g.dim) + ")");
  }
  for (std::size_t i = 0; i < g.dim; ++i) {
    v.actions.push_back(matrix_from_json(acts[i], v.dim, v.dim, *g.field, "action[" + std::to_string(i + 1) + "]"));
  }
  if (doc.contains("grading")) {
    const json& gr = doc.at("grading");
    if (!gr.is_array() || gr.size() != v.dim) throw InputError("'grading' must have one residue per basis vector");
    std::vector<int> res;
    for (const json& x : gr) {
      if (!x.is_number_integer()) throw InputError("grading entries must be integers");
      res.push_back(static_cast<int>(mod_n(x.get<long>(), g.sigma_order)));
    }
    v.grading = res;
  }
  return v;
}

json module_to_json(const GddModule& v) {
  json doc;
  doc["dim"] = v.dim;
  json parity = json::array();
  for (Parity p : v.parity) parity.push_back(static_cast<int>(p));
  doc["parity"] = parity;
  doc["partial"] = matrix_to_json(v.partial);
  json acts = json::array();
  for (const Matrix& a : v.actions) acts.push_back(matrix_to_json(a));
  doc["action"] = acts;
  if (v.grading) doc["grading"] = *v.grading;
  return doc;
}

std::vector<Violation> validate_module(const GddModule& v) {
  std::vector<Violation> out;
  const SuperalgebraSpec& g = v.algebra;
  const std::size_t m = g.dim;
  const int pidx = static_cast<int>(m) + 1;
  auto par = [&](std::size_t r, std::size_t c, Parity shift) { return v.parity[r] == v.parity[c] + shift; };

  if (!respects(v.partial, [&](std::size_t r, std::size_t c) { return par(r, c, Parity::Even); })) {
    out.push_back({"module-parity", {pidx}, "partial does not preserve parity"});
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!respects(v.actions[j], [&](std::size_t r, std::size_t c) { return par(r, c, g.parity[j]); })) {
      out.push_back({"module-parity", {static_cast<int>(j) + 1}, "action does not shift parity by the generator's parity"});
    }
  }
  // [partial, x_j] = (d x_j)
  for (std::size_t j = 0; j < m; ++j) {
    Matrix lhs = commutator(v.partial, v.actions[j], 1);
    if (!(lhs == v.action_of(g.d.column(j)))) {
      out.push_back({"module-relation", {pidx, static_cast<int>(j) + 1}, "[partial, x] != d(x) as matrices"});
    }
  }
  // X_i X_j - (-1)^{|i||j|} X_j X_i = [x_i, x_j]
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Matrix lhs = commutator(v.actions[i], v.actions[j], super_sign(g.parity[i], g.parity[j]));
      if (!(lhs == v.action_of(g.structure.bracket_basis(i, j)))) {
        out.push_back({"module-relation", {static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                       "super-commutator of actions != action of the bracket"});
      }
    }
  }
  if (v.grading) {
    const int n = g.sigma_order;
    const auto& gr = *v.grading;
    SigmaGrading sg = sigma_components(g);
    if (!respects(v.partial, [&](std::size_t r, std::size_t c) { return gr[r] == gr[c]; })) {
      out.push_back({"module-grading", {pidx}, "partial does not preserve the grading"});
    }
    for (std::size_t b = 0; b < sg.size(); ++b) {
      Matrix xb = v.action_of(sg.eigenvector(b));
      const int res = sg.residue[b];
      if (!respects(xb, [&](std::size_t r, std::size_t c) { return gr[r] == static_cast<int>(mod_n(gr[c] + res, n)); })) {
        out.push_back({"module-grading", {static_cast<int>(b) + 1},
                       "eigenvector of residue " + std::to_string(res) + " does not shift the grading by it"});
      }
    }
  }
  return out;
}

GddModule build_gdd_module(const json& doc, const SuperalgebraSpec& g) {
  GddModule v = parse_module(doc, g);
  auto vs = validate_module(v);
  if (!vs.empty()) throw ValidationError(std::move(vs));
  return v;
}

LoopWindow::LoopWindow(GddModule v, FieldElem lambda, int window, LoopMode mode)
    : v_(std::move(v)), lambda_(std::move(lambda)), window_(window), n_(v_.algebra.sigma_order), mode_(mode) {
  if (window < 2) throw std::invalid_argument("module window must be >= 2");
  if (mode == LoopMode::F && !v_.grading) throw std::invalid_argument("F-mode needs a graded module");
  t_ = std::make_shared<TruncatedAlgebra>(truncate(build_extension(v_.algebra), window));
  const SigmaGrading& sg = t_->grading();
  for (std::size_t b = 0; b < sg.size(); ++b) eigen_actions_.push_back(v_.action_of(sg.eigenvector(b)));
  const long span = static_cast<long>(n_) * window_;
  for (std::size_t j = 0; j < v_.dim; ++j) {
    for (long k = -span; k <= span; ++k) {
      ModuleBasis b{j, k};
      if (contains(b)) basis_.push_back(b);
    }
  }
}

bool LoopWindow::contains(const ModuleBasis& b) const {
  if (b.j >= v_.dim) return false;
  if (std::labs(b.k) > static_cast<long>(n_) * window_) return false;
  if (mode_ == LoopMode::F) return (*v_.grading)[b.j] == mod_n(b.k, n_);
  return true;
}

std::string LoopWindow::name(const ModuleBasis& b) const {
  std::ostringstream os;
  os << "v" << (b.j + 1) << "t^" << make_q(b.k, n_).get_str();
  return os.str();
}

namespace {

void add_mterm(ModuleVector& x, const ModuleBasis& b, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = x.find(b);
  if (it == x.end()) {
    x.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

void add_mscaled(ModuleVector& y, const FieldElem& a, const ModuleVector& x) {
  if (a.is_zero()) return;
  for (const auto& [b, c] : x) add_mterm(y, b, a * c);
}

}  // namespace

std::optional<ModuleVector> gamma_action(const LoopWindow& l, std::size_t x, const ModuleBasis& w) {
  const TruncatedAlgebra& t = l.algebra();
  const Label& lab = t.label(x);
  ModuleVector out;
  if (lab.kind == Label::Kind::Central) return out;
  const long target = w.k + t.degree(x);
  if (std::labs(target) > static_cast<long>(l.n()) * l.window()) return std::nullopt;
  const GddModule& v = l.module();
  if (lab.kind == Label::Kind::Vir) {
    // l_i (v (x) t^a) = ((lambda + a) v + i partial v) (x) t^{a+i}
    const FieldElem shift = l.lambda() + FieldElem(make_q(w.k, l.n()));
    add_mterm(out, {w.j, target}, shift);
    for (std::size_t r = 0; r < v.dim; ++r) {
      if (!v.partial(r, w.j).is_zero()) add_mterm(out, {r, target}, FieldElem(lab.k) * v.partial(r, w.j));
    }
  } else {
    const Matrix& xb = l.eigen_action(lab.b);
    for (std::size_t r = 0; r < v.dim; ++r) {
      if (!xb(r, w.j).is_zero()) add_mterm(out, {r, target}, xb(r, w.j));
    }
  }
  return out;
}

std::optional<ModuleVector> gamma_action(const LoopWindow& l, std::size_t x, const ModuleVector& w) {
  ModuleVector out;
  for (const auto& [b, c] : w) {
    auto r = gamma_action(l, x, b);
    if (!r) return std::nullopt;
    add_mscaled(out, c, *r);
  }
  return out;
}

std::optional<ModuleVector> gamma_action(const LoopWindow& l, const AlgElement& x, const ModuleVector& w) {
  ModuleVector out;
  for (const auto& [idx, c] : x) {
    auto r = gamma_action(l, idx, w);
    if (!r) return std::nullopt;
    add_mscaled(out, c, *r);
  }
  return out;
}

ModuleCheckReport module_axiom_check(const LoopWindow& l) {
  ModuleCheckReport rep;
  const TruncatedAlgebra& t = l.algebra();
  const BracketTable table(t);
  for (std::size_t u1 = 0; u1 < t.size(); ++u1) {
    for (std::size_t u2 = 0; u2 < t.size(); ++u2) {
      const auto& br = table.at(u1, u2);
      if (!br) continue;
      const FieldElem sign(super_sign(t.parity(u1), t.parity(u2)));
      for (const ModuleBasis& w : l.basis()) {
        ModuleVector wv{{w, FieldElem(1)}};
        auto lhs = gamma_action(l, *br, wv);
        auto a2 = gamma_action(l, u2, w);
        auto a1 = gamma_action(l, u1, w);
        if (!lhs || !a2 || !a1) continue;
        auto r1 = gamma_action(l, u1, *a2);
        auto r2 = gamma_action(l, u2, *a1);
        if (!r1 || !r2) continue;
        ++rep.checked;
        ModuleVector defect = *lhs;
        add_mscaled(defect, FieldElem(-1), *r1);
        add_mscaled(defect, sign, *r2);
        if (!defect.empty()) rep.witnesses.push_back({u1, u2, w, std::move(defect)});
      }
    }
  }
  return rep;
}

bool central_acts_trivially(const LoopWindow& l) {
  const TruncatedAlgebra& t = l.algebra();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.label(x).kind != Label::Kind::Central) continue;
    for (const ModuleBasis& w : l.basis()) {
      auto r = gamma_action(l, x, w);
      if (!r || !r->empty()) return false;
    }
  }
  return true;
}

std::vector<ComponentInfo> f_components(const LoopWindow& l) {
  const GddModule& v = l.module();
  if (!v.grading) throw std::invalid_argument("f_components needs a graded module");
  const int n = l.n();
  const auto& gr = *v.grading;
  std::vector<ComponentInfo> comps(static_cast<std::size_t>(n));
  auto component_of = [&](const ModuleBasis& b) { return static_cast<int>(mod_n(b.k - gr[b.j], n)); };
  for (int i = 0; i < n; ++i) comps[static_cast<std::size_t>(i)].index = i;
  for (const ModuleBasis& b : l.basis()) {
    ComponentInfo& c = comps[static_cast<std::size_t>(component_of(b))];
    c.vectors.push_back(b);
    ++c.weights[b.k];
  }
  const TruncatedAlgebra& t = l.algebra();
  for (ComponentInfo& c : comps) {
    c.closed = true;
    for (const ModuleBasis& b : c.vectors) {
      for (std::size_t x = 0; x < t.size() && c.closed; ++x) {
        auto r = gamma_action(l, x, b);
        if (!r) continue;
        for (const auto& [rb, coef] : *r) {
          if (!l.contains(rb) || component_of(rb) != c.index) {
            c.closed = false;
            break;
          }
        }
      }
      if (!c.closed) break;
    }
  }
  return comps;
}

const char* simplicity_name(Simplicity s) {
  switch (s) {
    case Simplicity::Simple:
      return "Simple";
    case Simplicity::Reducible:
      return "Reducible";
    case Simplicity::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::vector<Matrix> simplicity_generators(const GddModule& v) {
  std::vector<Matrix> gens;
  gens.push_back(v.partial);
  for (const Matrix& a : v.actions) gens.push_back(a);
  auto projection = [&](auto pred) {
    Matrix p(v.dim, v.dim);
    for (std::size_t i = 0; i < v.dim; ++i) {
      if (pred(i)) p(i, i) = 1;
    }
    return p;
  };
  gens.push_back(projection([&](std::size_t i) { return v.parity[i] == Parity::Even; }));
  if (v.grading) {
    for (int r = 0; r < v.algebra.sigma_order; ++r) {
      gens.push_back(projection([&](std::size_t i) { return (*v.grading)[i] == r; }));
    }
  }
  return gens;
}

namespace {

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
  return out;
}

// Basis of the unital algebra generated by `gens`, grown by left multiplication.
std::vector<Matrix> generated_algebra(const std::vector<Matrix>& gens, std::size_t r) {
  EchelonBasis seen(r * r);
  std::vector<Matrix> basis;
  std::vector<Matrix> frontier;
  Matrix id = Matrix::identity(r);
  seen.insert(flatten(id));
  basis.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty() && basis.size() < r * r) {
    std::vector<Matrix> next;
    for (const Matrix& a : frontier) {
      for (const Matrix& g : gens) {
        Matrix prod = g * a;
        if (seen.insert(flatten(prod))) {
          basis.push_back(prod);
          next.push_back(prod);
        }
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

// Smallest subspace containing `start` and invariant under `gens`.
std::vector<Vector> spin(const std::vector<Matrix>& gens, const Vector& start, std::size_t r) {
  EchelonBasis span(r);
  std::vector<Vector> basis, queue;
  if (!span.insert(start)) return {};
  basis.push_back(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (const Matrix& g : gens) {
      Vector w = g * v;
      if (span.insert(w)) {
        basis.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return basis;
}

// {v : <w, v> = 0 for every w in ws}.
std::vector<Vector> annihilator(const std::vector<Vector>& ws, std::size_t r) {
  if (ws.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < r; ++i) {
      Vector e(r);
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  return nullspace(Matrix::from_rows(ws, r));
}

}  // namespace

bool verify_invariant_subspace(const GddModule& v, const std::vector<Vector>& w) {
  const std::size_t r = v.dim;
  std::vector<Vector> basis = span_basis(w, r);
  if (basis.empty() || basis.size() >= r) return false;
  EchelonBasis span(r);
  for (const Vector& b : basis) span.insert(b);
  for (const Matrix& g : simplicity_generators(v)) {
    for (const Vector& b : basis) {
      if (!span.contains(g * b)) return false;
    }
  }
  return true;
}

SimplicityReport graded_simplicity(const GddModule& v) {
  const std::size_t r = v.dim;
  if (r == 0) throw std::invalid_argument("simplicity of the zero module is undefined");
  SimplicityReport rep;
  const std::vector<Matrix> gens = simplicity_generators(v);
  const std::vector<Matrix> alg = generated_algebra(gens, r);
  rep.algebra_dim = alg.size();
  if (alg.size() == r * r) {
    rep.verdict = Simplicity::Simple;
    return rep;
  }
  auto try_candidate = [&](const std::vector<Vector>& w) {
    if (w.empty() || w.size() >= r) return false;
    if (!verify_invariant_subspace(v, w)) return false;
    rep.verdict = Simplicity::Reducible;
    rep.witness = span_basis(w, r);
    return true;
  };
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < r; ++i) {
    Vector e(r);
    e[i] = 1;
    seeds.push_back(e);
  }
  for (const Matrix& a : alg) {
    for (const Vector& k : nullspace(a)) seeds.push_back(k);
  }
  for (const Vector& s : seeds) {
    if (try_candidate(spin(gens, s, r))) return rep;
  }
  // Invariant subspaces of the transposed action give invariant annihilators.
  std::vector<Matrix> tgens;
  for (const Matrix& g : gens) tgens.push_back(g.transpose());
  std::vector<Vector> tseeds;
  for (std::size_t i = 0; i < r; ++i) {
    Vector e(r);
    e[i] = 1;
    tseeds.push_back(e);
  }
  for (const Matrix& a : alg) {
    for (const Vector& k : nullspace(a.transpose())) tseeds.push_back(k);
  }
  for (const Vector& s : tseeds) {
    std::vector<Vector> w = spin(tgens, s, r);
    if (w.empty() || w.size() >= r) continue;
    if (try_candidate(annihilator(w, r))) return rep;
  }
  rep.verdict = Simplicity::Unknown;
  return rep;
}

namespace {

long binomial(int m, int i) {
  long c = 1;
  for (int k = 1; k <= i; ++k) c = c * (m - k + 1) / k;
  return c;
}

}  // namespace

OmegaReport omega_check(const LoopWindow& l, int m, OmegaMode mode) {
  if (m < 0) throw std::invalid_argument("differentiator order must be >= 0");
  OmegaReport rep;
  const TruncatedAlgebra& t = l.algebra();
  const long M = l.window();
  const long n = l.n();
  auto vir = [&](long i) { return t.find(Label::vir(i)); };
  auto apply_sum = [&](const std::vector<std::pair<std::size_t, std::size_t>>& ops, const ModuleBasis& w,
                       ModuleVector& acc) {
    // acc += sum_i (-1)^i C(m,i) A_i (B_i w); false if anything leaves the window.
    for (std::size_t i = 0; i < ops.size(); ++i) {
      auto inner = gamma_action(l, ops[i].second, w);
      if (!inner) return false;
      auto outer = gamma_action(l, ops[i].first, *inner);
      if (!outer) return false;
      const long sign = (i % 2) ? -1 : 1;
      add_mscaled(acc, FieldElem(sign * binomial(m, static_cast<int>(i))), *outer);
    }
    return true;
  };
  if (mode == OmegaMode::Vir) {
    // Omega_{k,s} = sum_i (-1)^i C(m,i) l_{k-i} l_{s+i}
    for (long k = -M + m; k <= M; ++k) {
      for (long s = -M; s + m <= M; ++s) {
        std::vector<std::pair<std::size_t, std::size_t>> ops;
        for (int i = 0; i <= m; ++i) ops.push_back({*vir(k - i), *vir(s + i)});
        for (const ModuleBasis& w : l.basis()) {
          ModuleVector acc;
          if (!apply_sum(ops, w, acc)) continue;
          ++rep.evaluations;
          if (!acc.empty()) rep.witnesses.push_back({{k, s}, w, std::move(acc)});
        }
      }
    }
  } else {
    // Omega_{x(a),p} = sum_i (-1)^i C(m,i) x(a-i) l_{p+i}
    const SigmaGrading& sg = t.grading();
    for (std::size_t b = 0; b < sg.size(); ++b) {
      for (long ka = -n * M; ka <= n * M; ++ka) {
        if (mod_n(ka, static_cast<int>(n)) != sg.residue[b]) continue;
        for (long p = -M; p + m <= M; ++p) {
          std::vector<std::pair<std::size_t, std::size_t>> ops;
          bool ok = true;
          for (int i = 0; i <= m; ++i) {
            auto x = t.find(Label::loop(b, ka - n * i));
            if (!x) {
              ok = false;
              break;
            }
            ops.push_back({*x, *vir(p + i)});
          }
          if (!ok) continue;
          for (const ModuleBasis& w : l.basis()) {
            ModuleVector acc;
            if (!apply_sum(ops, w, acc)) continue;
            ++rep.evaluations;
            if (!acc.empty()) rep.witnesses.push_back({{static_cast<long>(b), ka, p}, w, std::move(acc)});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace avsa
