#include "avsa/centralext.hpp"

namespace avsa {

std::size_t DimensionTable::total() const {
  std::size_t t = 1;
  for (const auto& row : n) t += row[0] + row[1];
  return t;
}

namespace {

// Unknowns are the entries of an m x m bilinear form, index i*m + j.
class FormSystem {
 public:
  explicit FormSystem(std::size_t m) : m_(m) {}

  std::size_t unknowns() const { return m_ * m_; }
  std::size_t var(std::size_t i, std::size_t j) const { return i * m_ + j; }
  Vector new_row() const { return Vector(unknowns()); }
  void add(Vector row) {
    if (!is_zero(row)) rows_.push_back(std::move(row));
  }

  /// Canonical (reduced echelon) basis of the solution space, as matrices.
  std::vector<Matrix> solve() const {
    Matrix a = Matrix::from_rows(rows_, unknowns());
    if (rows_.empty()) a = Matrix(0, unknowns());
    std::vector<Vector> basis = span_basis(nullspace(a), unknowns());
    std::vector<Matrix> out;
    for (const Vector& v : basis) out.push_back(to_matrix(v));
    return out;
  }

  Matrix to_matrix(const Vector& v) const {
    Matrix f(m_, m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) f(i, j) = v[var(i, j)];
    }
    return f;
  }

  Vector to_vector(const Matrix& f) const {
    Vector v(unknowns());
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) v[var(i, j)] = f(i, j);
    }
    return v;
  }

 private:
  std::size_t m_;
  std::vector<Vector> rows_;
};

// Rows forcing F(sigma x, sigma y) = F(x, y) on basis pairs.
void add_sigma_rows(FormSystem& sys, const Matrix& sigma, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector row = sys.new_row();
      for (std::size_t k = 0; k < m; ++k) {
        if (sigma(k, i).is_zero()) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (sigma(l, j).is_zero()) continue;
          row[sys.var(k, l)] += sigma(k, i) * sigma(l, j);
        }
      }
      row[sys.var(i, j)] -= 1;
      sys.add(std::move(row));
    }
  }
}

// Rows forcing F to vanish off the pairs of total parity `target`.
void add_parity_rows(FormSystem& sys, const std::vector<Parity>& parity, Parity target) {
  const std::size_t m = parity.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (parity[i] + parity[j] == target) continue;
      Vector row = sys.new_row();
      row[sys.var(i, j)] = 1;
      sys.add(std::move(row));
    }
  }
}

// F(e_i, e_j) = sign * (-1)^{|i||j|} F(e_j, e_i); sign = -1 for skew, +1 for symmetric.
void add_symmetry_rows(FormSystem& sys, const std::vector<Parity>& parity, int sign) {
  const std::size_t m = parity.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Vector row = sys.new_row();
      row[sys.var(i, j)] += 1;
      row[sys.var(j, i)] -= FieldElem(sign * super_sign(parity[i], parity[j]));
      sys.add(std::move(row));
    }
  }
}

std::array<std::size_t, 2> parities() { return {0, 1}; }

}  // namespace

bool is_super_cocycle(const SuperalgebraSpec& g, const Matrix& alpha) {
  const std::size_t m = g.dim;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!(alpha(x, y) == -(alpha(y, x) * FieldElem(super_sign(g.parity[x], g.parity[y]))))) return false;
      for (std::size_t z = 0; z < m; ++z) {
        // alpha(x,[y,z]) = alpha([x,y],z) + (-1)^{|x||y|} alpha(y,[x,z])
        FieldElem lhs, rhs;
        for (std::size_t k = 0; k < m; ++k) {
          lhs += alpha(x, k) * g.structure(y, z, k);
          rhs += g.structure(x, y, k) * alpha(k, z);
          rhs += FieldElem(super_sign(g.parity[x], g.parity[y])) * alpha(y, k) * g.structure(x, z, k);
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

bool is_invariant_form(const SuperalgebraSpec& g, const Matrix& b) {
  const std::size_t m = g.dim;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!(b(x, y) == b(y, x) * FieldElem(super_sign(g.parity[x], g.parity[y])))) return false;
      for (std::size_t z = 0; z < m; ++z) {
        FieldElem lhs, rhs;
        for (std::size_t k = 0; k < m; ++k) {
          lhs += g.structure(x, y, k) * b(k, z);
          rhs += b(x, k) * g.structure(y, z, k);
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

std::array<CocycleBasis, 2> invariant_cocycles(const SuperalgebraSpec& g) {
  const std::size_t m = g.dim;
  std::array<CocycleBasis, 2> out;
  for (std::size_t slot : parities()) {
    const Parity target = static_cast<Parity>(slot);
    out[slot].target_parity = target;
    if (m == 0) continue;
    FormSystem sys(m);
    add_symmetry_rows(sys, g.parity, -1);
    add_parity_rows(sys, g.parity, target);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
          Vector row = sys.new_row();
          const FieldElem sxy(super_sign(g.parity[x], g.parity[y]));
          for (std::size_t k = 0; k < m; ++k) {
            if (!g.structure(y, z, k).is_zero()) row[sys.var(x, k)] += g.structure(y, z, k);
            if (!g.structure(x, y, k).is_zero()) row[sys.var(k, z)] -= g.structure(x, y, k);
            if (!g.structure(x, z, k).is_zero()) row[sys.var(y, k)] -= sxy * g.structure(x, z, k);
          }
          sys.add(std::move(row));
        }
      }
    }
    // alpha(d e_i, e_j) + alpha(e_i, d e_j) - alpha(e_i, e_j) = 0
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Vector row = sys.new_row();
        for (std::size_t k = 0; k < m; ++k) {
          if (!g.d(k, i).is_zero()) row[sys.var(k, j)] += g.d(k, i);
          if (!g.d(k, j).is_zero()) row[sys.var(i, k)] += g.d(k, j);
        }
        row[sys.var(i, j)] -= 1;
        sys.add(std::move(row));
      }
    }
    add_sigma_rows(sys, g.sigma, m);
    out[slot].vectors = sys.solve();

    // Coboundaries (x,y) -> f([x,y]) for f = e_k^* of the target parity.
    EchelonBasis cob(sys.unknowns());
    for (std::size_t k = 0; k < m; ++k) {
      if (g.parity[k] != target) continue;
      Matrix f(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) f(i, j) = g.structure(i, j, k);
      }
      cob.insert(sys.to_vector(f));
    }
    EchelonBasis sum = cob;
    std::size_t added = 0;
    for (const Matrix& a : out[slot].vectors) added += sum.insert(sys.to_vector(a)) ? 1 : 0;
    out[slot].coboundary_overlap = out[slot].vectors.size() - added;
  }
  return out;
}

std::array<InvFormBasis, 2> invariant_forms(const GddAlgebra& gdd) {
  const SuperalgebraSpec& a = gdd.algebra;
  const std::size_t m = a.dim;
  const std::size_t p = gdd.partial_index;
  std::array<InvFormBasis, 2> out;
  for (std::size_t slot : parities()) {
    const Parity target = static_cast<Parity>(slot);
    out[slot].target_parity = target;
    FormSystem sys(m);
    add_symmetry_rows(sys, a.parity, +1);
    add_parity_rows(sys, a.parity, target);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
          // B([x,y],z) - B(x,[y,z]) = 0
          Vector row = sys.new_row();
          for (std::size_t k = 0; k < m; ++k) {
            if (!a.structure(x, y, k).is_zero()) row[sys.var(k, z)] += a.structure(x, y, k);
            if (!a.structure(y, z, k).is_zero()) row[sys.var(x, k)] -= a.structure(y, z, k);
          }
          sys.add(std::move(row));
        }
      }
    }
    add_sigma_rows(sys, a.sigma, m);
    Vector pp = sys.new_row();
    pp[sys.var(p, p)] = 1;
    sys.add(std::move(pp));
    out[slot].vectors = sys.solve();
    if (target == Parity::Even) {
      out[slot].has_distinguished = true;
      out[slot].distinguished = Matrix(m, m);
      out[slot].distinguished(p, p) = 1;
    }
  }
  return out;
}

std::array<QuotientFunctionals, 2> quotient_functionals(const SuperalgebraSpec& g) {
  const std::size_t m = g.dim;
  std::array<QuotientFunctionals, 2> out;
  // Spanning set of S as vectors in input coordinates.
  std::vector<Vector> span;
  const FieldElem half(mpq_class(1, 2));
  std::vector<Vector> dplus1(m), dplushalf(m);
  for (std::size_t j = 0; j < m; ++j) {
    dplus1[j] = g.d.column(j);
    dplus1[j][j] += 1;
    dplushalf[j] = g.d.column(j);
    dplushalf[j][j] += half;
    span.push_back(dplus1[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector ej(m);
      ej[j] = 1;
      span.push_back(g.bracket(dplushalf[i], ej));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        Vector ei(m);
        ei[i] = 1;
        span.push_back(g.bracket(ei, g.structure.bracket_basis(j, k)));
      }
    }
  }
  std::vector<Vector> s_basis = span_basis(span, m);
  for (std::size_t slot : parities()) {
    const Parity target = static_cast<Parity>(slot);
    out[slot].target_parity = target;
    if (m == 0) continue;
    std::vector<Vector> rows = s_basis;
    for (std::size_t k = 0; k < m; ++k) {
      if (g.parity[k] == target) continue;
      Vector r(m);
      r[k] = 1;
      rows.push_back(r);
    }
    // f(sigma e_j) - f(e_j) = 0
    for (std::size_t j = 0; j < m; ++j) {
      Vector r = g.sigma.column(j);
      r[j] -= 1;
      rows.push_back(r);
    }
    out[slot].vectors = span_basis(nullspace(Matrix::from_rows(rows, m)), m);
  }
  return out;
}

DimensionTable h2_summary(const SuperalgebraSpec& g) {
  DimensionTable t;
  auto rho = quotient_functionals(g);
  auto forms = invariant_forms(build_gdd(g));
  auto cocycles = invariant_cocycles(g);
  for (std::size_t s : parities()) {
    t.n[0][s] = rho[s].vectors.size();
    t.n[1][s] = forms[s].vectors.size();
    t.n[2][s] = cocycles[s].vectors.size();
    t.coboundary_overlap += cocycles[s].coboundary_overlap;
  }
  return t;
}

ExtensionData build_extension(const SuperalgebraSpec& g) {
  ExtensionData e;
  e.spec = g;
  e.grading = sigma_components(g);
  e.gdd = build_gdd(g);
  e.rho = quotient_functionals(g);
  e.forms = invariant_forms(e.gdd);
  e.cocycles = invariant_cocycles(g);
  for (std::size_t s : parities()) {
    e.dims.n[0][s] = e.rho[s].vectors.size();
    e.dims.n[1][s] = e.forms[s].vectors.size();
    e.dims.n[2][s] = e.cocycles[s].vectors.size();
    e.dims.coboundary_overlap += e.cocycles[s].coboundary_overlap;
  }
  e.labels.push_back({"z", CentralKind::Virasoro, Parity::Even, 0});
  const CentralKind kinds[3] = {CentralKind::Functional, CentralKind::Form, CentralKind::Cocycle};
  const char* tags[3] = {"-1", "0", "1"};
  for (int k = 0; k < 3; ++k) {
    for (std::size_t s : parities()) {
      for (std::size_t idx = 0; idx < e.dims.n[static_cast<std::size_t>(k)][s]; ++idx) {
        std::string name = std::string("z_{") + tags[k] + "," + std::to_string(idx + 1) + "," + std::to_string(s) + "}";
        e.labels.push_back({name, kinds[k], static_cast<Parity>(s), idx});
      }
    }
  }
  return e;
}

}  // namespace avsa
