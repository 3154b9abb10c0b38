#include "avsa/loopreal.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace avsa {

void add_term(AlgElement& x, std::size_t label, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = x.find(label);
  if (it == x.end()) {
    x.emplace(label, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

AlgElement& add_scaled(AlgElement& y, const FieldElem& a, const AlgElement& x) {
  if (a.is_zero()) return y;
  for (const auto& [idx, c] : x) add_term(y, idx, a * c);
  return y;
}

namespace {

long mod_n(long k, int n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

std::string rational_text(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q.get_str();
}

// Q = blockdiag(P, 1): eigenbasis of g-double-dot in input coordinates.
Matrix gdd_change(const Matrix& p) {
  const std::size_t m = p.rows();
  Matrix q(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) q(i, j) = p(i, j);
  }
  q(m, m) = 1;
  return q;
}

}  // namespace

long TruncatedAlgebra::degree(std::size_t idx) const {
  const Label& l = labels_[idx];
  switch (l.kind) {
    case Label::Kind::Vir:
      return l.k * n_;
    case Label::Kind::Loop:
      return l.k;
    case Label::Kind::Central:
      return 0;
  }
  return 0;
}

Parity TruncatedAlgebra::parity(std::size_t idx) const {
  const Label& l = labels_[idx];
  switch (l.kind) {
    case Label::Kind::Vir:
      return Parity::Even;
    case Label::Kind::Loop:
      return grading_.parity[l.b];
    case Label::Kind::Central:
      return ext_->labels[l.b].parity;
  }
  return Parity::Even;
}

std::optional<std::size_t> TruncatedAlgebra::find(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string TruncatedAlgebra::name(std::size_t idx) const {
  const Label& l = labels_[idx];
  std::ostringstream os;
  switch (l.kind) {
    case Label::Kind::Vir:
      os << "l_" << l.k;
      break;
    case Label::Kind::Loop:
      os << "x" << (l.b + 1) << "t^" << rational_text(l.k, n_);
      break;
    case Label::Kind::Central:
      os << ext_->labels[l.b].name;
      break;
  }
  return os.str();
}

std::size_t TruncatedAlgebra::count(Label::Kind kind) const {
  std::size_t c = 0;
  for (const auto& l : labels_) c += l.kind == kind ? 1 : 0;
  return c;
}

std::optional<std::size_t> TruncatedAlgebra::z_index() const {
  if (centerless_) return std::nullopt;
  return find(Label::central(0));
}

void TruncatedAlgebra::enumerate(bool with_centrals) {
  labels_.clear();
  index_.clear();
  for (long i = -window_; i <= window_; ++i) labels_.push_back(Label::vir(i));
  const long span = static_cast<long>(n_) * window_;
  for (long k = -span; k <= span; ++k) {
    for (std::size_t b = 0; b < grading_.size(); ++b) {
      if (grading_.residue[b] == mod_n(k, n_)) labels_.push_back(Label::loop(b, k));
    }
  }
  central_offset_ = labels_.size();
  if (with_centrals) {
    for (std::size_t c = 0; c < ext_->labels.size(); ++c) labels_.push_back(Label::central(c));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
}

TruncatedAlgebra truncate(const ExtensionData& ext, int window) {
  if (window < 2) throw std::invalid_argument("window must be >= 2");
  TruncatedAlgebra t;
  t.n_ = ext.spec.sigma_order;
  t.window_ = window;
  t.centerless_ = false;
  t.grading_ = ext.grading;
  t.spec_ = ext.spec;
  t.ext_ = std::make_shared<const ExtensionData>(ext);
  t.enumerate(true);

  const std::size_t m = ext.spec.dim;
  const Matrix& p = t.grading_.change_of_basis;
  const Matrix q = gdd_change(p);
  const std::size_t nc = ext.labels.size();
  t.rho_e_.assign(nc, Vector());
  t.form_e_.assign(nc, Matrix());
  t.cocycle_e_.assign(nc, Matrix());
  for (std::size_t c = 0; c < nc; ++c) {
    const CentralLabel& cl = ext.labels[c];
    const std::size_t s = parity_slot(cl.parity);
    switch (cl.kind) {
      case CentralKind::Virasoro:
        break;
      case CentralKind::Functional: {
        const Vector& f = ext.rho[s].vectors[cl.index];
        Vector fe(m);
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t i = 0; i < m; ++i) fe[b] += f[i] * p(i, b);
        }
        t.rho_e_[c] = fe;
        break;
      }
      case CentralKind::Form:
        t.form_e_[c] = q.transpose() * ext.forms[s].vectors[cl.index] * q;
        break;
      case CentralKind::Cocycle:
        t.cocycle_e_[c] = p.transpose() * ext.cocycles[s].vectors[cl.index] * p;
        break;
    }
  }
  return t;
}

TruncatedAlgebra truncate_centerless(const SuperalgebraSpec& g, int window) {
  if (window < 2) throw std::invalid_argument("window must be >= 2");
  TruncatedAlgebra t;
  t.n_ = g.sigma_order;
  t.window_ = window;
  t.centerless_ = true;
  t.grading_ = sigma_components(g);
  t.spec_ = g;
  t.enumerate(false);
  return t;
}

void TruncatedAlgebra::central_terms_vir_loop(AlgElement& out, long i, std::size_t b) const {
  const std::size_t m = spec_.dim;
  for (std::size_t c = 0; c < ext_->labels.size(); ++c) {
    const CentralKind kind = ext_->labels[c].kind;
    if (kind == CentralKind::Functional) {
      add_term(out, central_offset_ + c, FieldElem(make_q(i * i * i - i, 12)) * rho_e_[c][b]);
    } else if (kind == CentralKind::Form) {
      add_term(out, central_offset_ + c, FieldElem(i * i - i) * form_e_[c](m, b));
    }
  }
}

void TruncatedAlgebra::central_terms_loop_loop(AlgElement& out, std::size_t b, long k, std::size_t c2) const {
  const std::size_t m = spec_.dim;
  const SuperalgebraSpec& e = grading_.eigen;
  const mpq_class a = make_q(k, n_);
  for (std::size_t c = 0; c < ext_->labels.size(); ++c) {
    const CentralKind kind = ext_->labels[c].kind;
    FieldElem v;
    if (kind == CentralKind::Functional) {
      FieldElem rho_br;
      for (std::size_t q = 0; q < m; ++q) {
        if (!e.structure(b, c2, q).is_zero()) rho_br += e.structure(b, c2, q) * rho_e_[c][q];
      }
      mpq_class coef = (1 - 4 * a * a) / 24;
      v = FieldElem(coef) * rho_br;
    } else if (kind == CentralKind::Form) {
      v = FieldElem(a) * form_e_[c](b, c2);
      for (std::size_t q = 0; q < m; ++q) {
        if (!e.structure(b, c2, q).is_zero()) v += e.structure(b, c2, q) * form_e_[c](m, q);
      }
    } else if (kind == CentralKind::Cocycle) {
      v = cocycle_e_[c](b, c2);
    }
    add_term(out, central_offset_ + c, v);
  }
}

std::optional<AlgElement> TruncatedAlgebra::bracket(std::size_t u, std::size_t v) const {
  const Label& lu = labels_[u];
  const Label& lv = labels_[v];
  AlgElement out;
  if (lu.kind == Label::Kind::Central || lv.kind == Label::Kind::Central) return out;
  const long deg = degree(u) + degree(v);
  if (std::labs(deg) > static_cast<long>(n_) * window_) return std::nullopt;
  const SuperalgebraSpec& e = grading_.eigen;
  const std::size_t m = spec_.dim;

  if (lu.kind == Label::Kind::Vir && lv.kind == Label::Kind::Vir) {
    const long i = lu.k, j = lv.k;
    add_term(out, index_.at(Label::vir(i + j)), FieldElem(j - i));
    if (!centerless_ && i + j == 0) add_term(out, central_offset_, FieldElem(make_q(i * i * i - i, 12)));
    return out;
  }
  if (lu.kind == Label::Kind::Loop && lv.kind == Label::Kind::Vir) {
    auto r = bracket(v, u);
    AlgElement neg;
    add_scaled(neg, FieldElem(-1), *r);
    return neg;
  }
  if (lu.kind == Label::Kind::Vir) {
    // [l_i, x_b t^{k/n}] = ((k/n) x_b + i d(x_b)) t^{k/n + i}
    const long i = lu.k, k = lv.k;
    const std::size_t b = lv.b;
    const long target = k + static_cast<long>(n_) * i;
    add_term(out, index_.at(Label::loop(b, target)), FieldElem(make_q(k, n_)));
    for (std::size_t c = 0; c < m; ++c) {
      if (!e.d(c, b).is_zero()) add_term(out, index_.at(Label::loop(c, target)), FieldElem(i) * e.d(c, b));
    }
    if (!centerless_ && target == 0) central_terms_vir_loop(out, i, b);
    return out;
  }
  // [x_b t^{k/n}, x_c t^{k'/n}] = [x_b, x_c] t^{(k+k')/n}
  const std::size_t b = lu.b, c = lv.b;
  const long target = lu.k + lv.k;
  for (std::size_t q = 0; q < m; ++q) {
    if (!e.structure(b, c, q).is_zero()) add_term(out, index_.at(Label::loop(q, target)), e.structure(b, c, q));
  }
  if (!centerless_ && target == 0) central_terms_loop_loop(out, b, lu.k, c);
  return out;
}

std::optional<AlgElement> TruncatedAlgebra::bracket(const AlgElement& u, const AlgElement& v) const {
  AlgElement out;
  for (const auto& [i, a] : u) {
    for (const auto& [j, b] : v) {
      auto r = bracket(i, j);
      if (!r) return std::nullopt;
      add_scaled(out, a * b, *r);
    }
  }
  return out;
}

BracketTable::BracketTable(const TruncatedAlgebra& t) : size_(t.size()), table_(t.size() * t.size()) {
  for (std::size_t u = 0; u < size_; ++u) {
    for (std::size_t v = 0; v < size_; ++v) table_[u * size_ + v] = t.bracket(u, v);
  }
}

bool admissible(const TruncatedAlgebra& t, std::size_t u, std::size_t v, std::size_t w) {
  const long lim = static_cast<long>(t.n()) * t.window();
  const long a = t.degree(u), b = t.degree(v), c = t.degree(w);
  return std::labs(a + b) <= lim && std::labs(a + c) <= lim && std::labs(b + c) <= lim && std::labs(a + b + c) <= lim;
}

namespace {

// Dense accumulator for sums of sparse elements.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), touched_flag_(n, false) {}

  void add(const FieldElem& a, const AlgElement& x) {
    for (const auto& [idx, c] : x) {
      if (!touched_flag_[idx]) {
        touched_flag_[idx] = true;
        touched_.push_back(idx);
      }
      values_[idx] += a * c;
    }
  }

  // Returns the accumulated element and resets.
  AlgElement take() {
    AlgElement out;
    for (std::size_t idx : touched_) {
      if (!values_[idx].is_zero()) out.emplace(idx, values_[idx]);
      values_[idx] = FieldElem();
      touched_flag_[idx] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<FieldElem> values_;
  std::vector<bool> touched_flag_;
  std::vector<std::size_t> touched_;
};

// acc += sign * [u, x] using the table.
void bracket_into(Accumulator& acc, const BracketTable& table, const FieldElem& sign, std::size_t u,
                  const AlgElement& x) {
  for (const auto& [idx, c] : x) {
    const auto& r = table.at(u, idx);
    if (!r) throw std::logic_error("Jacobi term left the window despite admissibility");
    acc.add(sign * c, *r);
  }
}

}  // namespace

JacobiReport jacobi_check(const TruncatedAlgebra& t) { return jacobi_check(t, BracketTable(t)); }

JacobiReport jacobi_check(const TruncatedAlgebra& t, const BracketTable& table) {
  JacobiReport rep;
  const std::size_t L = t.size();
  rep.labels = L;
  Accumulator acc(L);
  const FieldElem plus(1), minus(-1);
  for (std::size_t u = 0; u < L; ++u) {
    for (std::size_t v = 0; v < L; ++v) {
      for (std::size_t w = 0; w < L; ++w) {
        if (!admissible(t, u, v, w)) continue;
        ++rep.admissible_triples;
        const Parity pu = t.parity(u), pv = t.parity(v), pw = t.parity(w);
        // (-1)^{|u||w|}[u,[v,w]] + (-1)^{|v||u|}[v,[w,u]] + (-1)^{|w||v|}[w,[u,v]]
        bracket_into(acc, table, super_sign(pu, pw) < 0 ? minus : plus, u, *table.at(v, w));
        bracket_into(acc, table, super_sign(pv, pu) < 0 ? minus : plus, v, *table.at(w, u));
        bracket_into(acc, table, super_sign(pw, pv) < 0 ? minus : plus, w, *table.at(u, v));
        AlgElement defect = acc.take();
        if (!defect.empty()) rep.witnesses.push_back({u, v, w, std::move(defect)});
      }
    }
  }
  return rep;
}

FieldElem pi_eval(const TruncatedAlgebra& t, const PiDatum& datum, std::size_t u, std::size_t v) {
  const Label& lu = t.label(u);
  const Label& lv = t.label(v);
  if (lu.kind == Label::Kind::Central || lv.kind == Label::Kind::Central) {
    throw std::invalid_argument("pi_eval takes centerless labels");
  }
  if (lu.kind == Label::Kind::Loop && lv.kind == Label::Kind::Vir) return -pi_eval(t, datum, v, u);
  const SuperalgebraSpec& g = t.spec();
  const std::size_t m = g.dim;
  const Matrix& p = t.grading().change_of_basis;
  auto form_value = [&](const Vector& x, const Vector& y) {
    FieldElem s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (!y[j].is_zero()) s += x[i] * datum.form(i, j) * y[j];
      }
    }
    return s;
  };
  auto padded = [&](const Vector& x) {
    Vector y = x;
    y.push_back(FieldElem());
    return y;
  };
  Vector partial(m + 1);
  partial[m] = 1;
  auto functional = [&](const Vector& x) {
    FieldElem s;
    for (std::size_t i = 0; i < m; ++i) s += datum.functional[i] * x[i];
    return s;
  };

  if (lu.kind == Label::Kind::Vir && lv.kind == Label::Kind::Vir) {
    const long i = lu.k, j = lv.k;
    if (datum.kind != 0 || i + j != 0) return FieldElem();
    return FieldElem(make_q(i * i * i - i, 12)) * datum.form(m, m);
  }
  if (lu.kind == Label::Kind::Vir) {
    const long i = lu.k;
    if (static_cast<long>(t.n()) * i + lv.k != 0) return FieldElem();
    const Vector x = p.column(lv.b);
    if (datum.kind == -1) return FieldElem(make_q(i * i * i - i, 6)) * functional(x);
    if (datum.kind == 0) return FieldElem(i * i - i) * form_value(partial, padded(x));
    return FieldElem();
  }
  if (lu.k + lv.k != 0) return FieldElem();
  const mpq_class a = make_q(lu.k, t.n());
  const Vector x = p.column(lu.b), y = p.column(lv.b);
  if (datum.kind == -1) return FieldElem(mpq_class((1 - 4 * a * a) / 12)) * functional(g.bracket(x, y));
  if (datum.kind == 0) return FieldElem(a) * form_value(padded(x), padded(y)) + form_value(partial, padded(g.bracket(x, y)));
  return form_value(x, y);
}

OracleReport oracle_h2(const SuperalgebraSpec& g, int window, int inner) {
  if (inner < 0 || inner > window - 2) throw std::invalid_argument("oracle needs 0 <= inner <= window - 2");
  TruncatedAlgebra t = truncate_centerless(g, window);
  const std::size_t L = t.size();
  const long n = t.n();
  OracleReport rep;
  rep.window = window;
  rep.inner = inner;
  rep.labels = L;

  // Unknown alpha(p, q) for p <= q (skipping the forced zeros alpha(x, x), x even),
  // grouped by the total degree deg p + deg q.
  struct Block {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Vector> rows;
  };
  std::map<long, Block> blocks;
  std::vector<long> local(L * L, -1);
  for (std::size_t p = 0; p < L; ++p) {
    for (std::size_t q = p; q < L; ++q) {
      if (p == q && t.parity(p) == Parity::Even) continue;
      Block& blk = blocks[t.degree(p) + t.degree(q)];
      local[p * L + q] = static_cast<long>(blk.pairs.size());
      blk.pairs.push_back({p, q});
      ++rep.unknowns;
    }
  }
  // alpha(x, y) as (local index, coefficient); coefficient 0 for a forced zero.
  auto var = [&](std::size_t x, std::size_t y) -> std::pair<long, FieldElem> {
    if (x <= y) {
      long id = local[x * L + y];
      return {id, id < 0 ? FieldElem() : FieldElem(1)};
    }
    long id = local[y * L + x];
    return {id, id < 0 ? FieldElem() : FieldElem(-super_sign(t.parity(x), t.parity(y)))};
  };
  auto add_pair = [&](Vector& row, std::size_t x, std::size_t y, const FieldElem& c) {
    auto [id, s] = var(x, y);
    if (id >= 0 && !s.is_zero()) row[static_cast<std::size_t>(id)] += s * c;
  };

  std::vector<std::optional<AlgElement>> br(L * L);
  for (std::size_t x = 0; x < L; ++x) {
    for (std::size_t y = 0; y < L; ++y) br[x * L + y] = t.bracket(x, y);
  }
  for (std::size_t x = 0; x < L; ++x) {
    for (std::size_t y = x; y < L; ++y) {
      for (std::size_t z = y; z < L; ++z) {
        if (!admissible(t, x, y, z)) continue;
        Block& blk = blocks[t.degree(x) + t.degree(y) + t.degree(z)];
        Vector row(blk.pairs.size());
        // alpha(x,[y,z]) - alpha([x,y],z) - (-1)^{|x||y|} alpha(y,[x,z]) = 0
        for (const auto& [w, c] : *br[y * L + z]) add_pair(row, x, w, c);
        for (const auto& [w, c] : *br[x * L + y]) add_pair(row, w, z, -c);
        const FieldElem s(-super_sign(t.parity(x), t.parity(y)));
        for (const auto& [w, c] : *br[x * L + z]) add_pair(row, y, w, s * c);
        if (!is_zero(row)) {
          blk.rows.push_back(std::move(row));
          ++rep.equations;
        }
      }
    }
  }
  // Normalization: alpha(l_1, L_{-1}) = 0 and alpha(l_0, L_a) = 0 for a != 0.
  const std::size_t l0 = *t.find(Label::vir(0)), l1 = *t.find(Label::vir(1));
  for (std::size_t u = 0; u < L; ++u) {
    const long du = t.degree(u);
    if (du == -n) {
      Block& blk = blocks[du + n];
      Vector row(blk.pairs.size());
      add_pair(row, l1, u, FieldElem(1));
      if (!is_zero(row)) {
        blk.rows.push_back(std::move(row));
        ++rep.equations;
      }
    }
    if (du != 0) {
      Block& blk = blocks[du];
      Vector row(blk.pairs.size());
      add_pair(row, l0, u, FieldElem(1));
      if (!is_zero(row)) {
        blk.rows.push_back(std::move(row));
        ++rep.equations;
      }
    }
  }
  const long inner_lim = n * inner;
  for (auto& [deg, blk] : blocks) {
    const std::size_t width = blk.pairs.size();
    Matrix a = blk.rows.empty() ? Matrix(0, width) : Matrix::from_rows(blk.rows, width);
    std::vector<Vector> sol = nullspace(a);
    rep.raw_dim += sol.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < width; ++i) {
      const auto [p, q] = blk.pairs[i];
      if (std::labs(t.degree(p)) <= inner_lim && std::labs(t.degree(q)) <= inner_lim) keep.push_back(i);
    }
    if (keep.empty() || sol.empty()) continue;
    std::vector<Vector> projected;
    for (const Vector& v : sol) {
      Vector r;
      for (std::size_t i : keep) r.push_back(v[i]);
      projected.push_back(std::move(r));
    }
    rep.projected_dim += rank(Matrix::from_rows(projected, keep.size()));
  }
  return rep;
}

}  // namespace avsa
