#include "avsa/superalgebra.hpp"

#include <sstream>

namespace avsa {

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.check;
  if (!v.witness.empty()) {
    os << " witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out = "validation failed";
  for (const auto& v : vs) out += "\n  " + describe(v);
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

bool StructureConstants::operator==(const StructureConstants& o) const {
  if (dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!(c_[i] == o.c_[i])) return false;
  }
  return true;
}

Vector SuperalgebraSpec::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      FieldElem s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const FieldElem& c = structure(i, j, k);
        if (!c.is_zero()) out[k] += s * c;
      }
    }
  }
  return out;
}

Parity SuperalgebraSpec::parity_of(const Vector& x) const {
  for (std::size_t i = 0; i < dim; ++i) {
    if (!x[i].is_zero()) return parity[i];
  }
  return Parity::Even;
}

namespace {

int one_based(std::size_t i) { return static_cast<int>(i) + 1; }

bool preserves_parity(const Matrix& m, const std::vector<Parity>& parity) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (parity[i] != parity[j] && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

// Image of e_j under a column-convention matrix.
Vector image(const Matrix& m, std::size_t j) { return m.column(j); }

}  // namespace

std::vector<Violation> validate_structure(const SuperalgebraSpec& g) {
  std::vector<Violation> out;
  const std::size_t m = g.dim;
  if (g.parity.size() != m || g.structure.dim() != m) {
    out.push_back({"shape", {}, "parity/structure sizes do not match dim"});
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const int s = super_sign(g.parity[i], g.parity[j]);
      for (std::size_t k = 0; k < m; ++k) {
        if (!(g.structure(i, j, k) == -(g.structure(j, i, k) * FieldElem(s)))) {
          out.push_back({"super-skew-symmetry", {one_based(i), one_based(j)},
                         "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" + std::to_string(k + 1) +
                             ") = " + g.structure(i, j, k).str() + " vs c(" + std::to_string(j + 1) + "," +
                             std::to_string(i + 1) + ";" + std::to_string(k + 1) +
                             ") = " + g.structure(j, i, k).str()});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!g.structure(i, j, k).is_zero() && (g.parity[i] + g.parity[j]) != g.parity[k]) {
          out.push_back({"parity-homogeneity", {one_based(i), one_based(j), one_based(k)},
                         "bracket of basis elements lands in the wrong parity"});
        }
      }
    }
  }
  if (!out.empty()) return out;
  // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
  std::vector<Vector> unit(m, Vector(m));
  for (std::size_t i = 0; i < m; ++i) unit[i][i] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Parity pi = g.parity[i], pj = g.parity[j], pk = g.parity[k];
        Vector sum(m);
        axpy(sum, FieldElem(super_sign(pi, pk)), g.bracket(unit[i], g.structure.bracket_basis(j, k)));
        axpy(sum, FieldElem(super_sign(pj, pi)), g.bracket(unit[j], g.structure.bracket_basis(k, i)));
        axpy(sum, FieldElem(super_sign(pk, pj)), g.bracket(unit[k], g.structure.bracket_basis(i, j)));
        if (!is_zero(sum)) {
          out.push_back({"super-jacobi", {one_based(i), one_based(j), one_based(k)}, "cyclic sum is nonzero"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_derivation(const SuperalgebraSpec& g) {
  std::vector<Violation> out;
  const std::size_t m = g.dim;
  if (g.d.rows() != m || g.d.cols() != m) {
    out.push_back({"derivation-shape", {}, "d must be dim x dim"});
    return out;
  }
  if (!preserves_parity(g.d, g.parity)) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (g.parity[i] != g.parity[j] && !g.d(i, j).is_zero()) {
          out.push_back({"derivation-parity", {one_based(i), one_based(j)}, "d is not even"});
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector lhs = g.d * g.structure.bracket_basis(i, j);
      Vector ei(m), ej(m);
      ei[i] = 1;
      ej[j] = 1;
      Vector rhs = g.bracket(image(g.d, i), ej);
      axpy(rhs, FieldElem(1), g.bracket(ei, image(g.d, j)));
      for (std::size_t k = 0; k < m; ++k) lhs[k] -= rhs[k];
      if (!is_zero(lhs)) {
        out.push_back({"leibniz", {one_based(i), one_based(j)}, "d[x,y] != [dx,y] + [x,dy]"});
      }
    }
  }
  Matrix shifted = g.d;
  for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= 1;
  std::vector<Vector> kernel = nullspace(shifted);
  if (!kernel.empty()) {
    std::string vec;
    for (std::size_t i = 0; i < m; ++i) vec += (i ? "," : "") + kernel[0][i].str();
    out.push_back({"eigenvalue-1", {}, "d has eigenvalue 1 with eigenvector (" + vec + ")"});
  }
  return out;
}

Matrix matrix_power(const Matrix& m, int k) {
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

std::vector<Violation> validate_automorphism(const SuperalgebraSpec& g) {
  std::vector<Violation> out;
  const std::size_t m = g.dim;
  const int n = g.sigma_order;
  if (g.sigma.rows() != m || g.sigma.cols() != m) {
    out.push_back({"automorphism-shape", {}, "sigma must be dim x dim"});
    return out;
  }
  if (n < 1) {
    out.push_back({"automorphism-order", {}, "sigma_order must be >= 1"});
    return out;
  }
  if (g.field->order() % n != 0) {
    out.push_back({"field-compatibility", {n, g.field->order()},
                   "sigma_order " + std::to_string(n) + " does not divide field_order " +
                       std::to_string(g.field->order())});
  }
  if (!preserves_parity(g.sigma, g.parity)) {
    out.push_back({"automorphism-parity", {}, "sigma is not even"});
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector lhs = g.sigma * g.structure.bracket_basis(i, j);
      Vector rhs = g.bracket(image(g.sigma, i), image(g.sigma, j));
      for (std::size_t k = 0; k < m; ++k) lhs[k] -= rhs[k];
      if (!is_zero(lhs)) {
        out.push_back({"automorphism-homomorphism", {one_based(i), one_based(j)},
                       "sigma[x,y] != [sigma x, sigma y]"});
      }
    }
  }
  const Matrix id = Matrix::identity(m);
  Matrix power = id;
  for (int k = 1; k <= n; ++k) {
    power = power * g.sigma;
    if (k < n && power == id) {
      out.push_back({"automorphism-order", {k, n},
                     "sigma^" + std::to_string(k) + " = id, so the order is not " + std::to_string(n)});
      break;
    }
    if (k == n && !(power == id)) {
      out.push_back({"automorphism-order", {n}, "sigma^" + std::to_string(n) + " != id"});
    }
  }
  if (!(g.sigma * g.d == g.d * g.sigma)) {
    out.push_back({"sigma-d-commute", {}, "sigma d != d sigma"});
  }
  return out;
}

void validate_all(const SuperalgebraSpec& g) {
  std::vector<Violation> all = validate_structure(g);
  if (all.empty()) {
    for (auto& v : validate_derivation(g)) all.push_back(std::move(v));
    for (auto& v : validate_automorphism(g)) all.push_back(std::move(v));
  }
  if (!all.empty()) throw ValidationError(std::move(all));
}

SuperalgebraSpec change_basis(const SuperalgebraSpec& g, const Matrix& p) {
  const std::size_t m = g.dim;
  Matrix pinv = inverse(p);
  SuperalgebraSpec out;
  out.name = g.name;
  out.field = g.field;
  out.dim = m;
  out.sigma_order = g.sigma_order;
  out.parity.resize(m);
  std::vector<Vector> cols(m);
  for (std::size_t b = 0; b < m; ++b) {
    cols[b] = p.column(b);
    out.parity[b] = g.parity_of(cols[b]);
  }
  out.structure = StructureConstants(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Vector coords = pinv * g.bracket(cols[a], cols[b]);
      for (std::size_t k = 0; k < m; ++k) out.structure(a, b, k) = coords[k];
    }
  }
  out.d = pinv * g.d * p;
  out.sigma = pinv * g.sigma * p;
  return out;
}

SigmaGrading sigma_components(const SuperalgebraSpec& g) {
  SigmaGrading gr;
  const std::size_t m = g.dim;
  gr.n = g.sigma_order;
  gr.components.resize(static_cast<std::size_t>(gr.n));
  std::vector<Vector> columns;
  // Eigenvectors are computed inside each parity block so they come out homogeneous.
  for (int r = 0; r < gr.n; ++r) {
    const FieldElem mu = g.field->root_of_unity(gr.n, r);
    for (Parity par : {Parity::Even, Parity::Odd}) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < m; ++i) {
        if (g.parity[i] == par) idx.push_back(i);
      }
      if (idx.empty()) continue;
      Matrix block(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = g.sigma(idx[a], idx[b]);
      }
      for (const Vector& v : fixed_space(block, mu)) {
        Vector full(m);
        for (std::size_t a = 0; a < idx.size(); ++a) full[idx[a]] = v[a];
        gr.components[static_cast<std::size_t>(r)].push_back(full);
        columns.push_back(full);
        gr.residue.push_back(r);
        gr.parity.push_back(par);
      }
    }
  }
  if (columns.size() != m) {
    throw std::logic_error("sigma is not diagonalizable over Q(w_" + std::to_string(g.field->order()) + ")");
  }
  gr.change_of_basis = Matrix::from_columns(columns, m);
  gr.inverse_change = m ? inverse(gr.change_of_basis) : Matrix();
  gr.eigen = m ? change_basis(g, gr.change_of_basis) : g;
  return gr;
}

GddAlgebra build_gdd(const SuperalgebraSpec& g) {
  const std::size_t m = g.dim;
  GddAlgebra out;
  out.partial_index = m;
  SuperalgebraSpec& a = out.algebra;
  a.name = g.name + "+partial";
  a.field = g.field;
  a.dim = m + 1;
  a.parity = g.parity;
  a.parity.push_back(Parity::Even);
  a.structure = StructureConstants(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) a.structure(i, j, k) = g.structure(i, j, k);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      a.structure(m, j, i) = g.d(i, j);
      a.structure(j, m, i) = -g.d(i, j);
    }
  }
  a.d = Matrix(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a.d(i, j) = g.d(i, j);
  }
  a.sigma = Matrix(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a.sigma(i, j) = g.sigma(i, j);
  }
  a.sigma(m, m) = 1;
  a.sigma_order = g.sigma_order;
  return out;
}

}  // namespace avsa
