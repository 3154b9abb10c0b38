#include "avsa/catalog.hpp"

#include <numeric>
#include <sstream>

namespace avsa {

namespace {

const std::vector<mpq_class>& beta_samples() {
  static const std::vector<mpq_class> b = {mpq_class(-1), mpq_class(-1, 2), mpq_class(0), mpq_class(1, 2),
                                           mpq_class(2)};
  return b;
}

const std::vector<std::pair<int, int>>& twist_samples() {
  static const std::vector<std::pair<int, int>> t = {{1, 0}, {2, 1}, {3, 1}, {3, 2}};
  return t;
}

std::string beta_text(const mpq_class& b) { return b.get_str(); }

void require(bool ok, const ExampleId& id, const std::string& what) {
  if (!ok) throw CatalogError(id.name + ": " + what);
}

void check_twist(const ExampleId& id) {
  const auto& p = id.params;
  require(p.n >= 1, id, "n must be >= 1");
  require(p.i >= 0 && p.i < p.n, id, "i must lie in 0..n-1");
  require(std::gcd(p.n, p.i) == 1, id, "gcd(n, i) must be 1");
}

SuperalgebraSpec blank(const std::string& name, int field_order, std::size_t dim, int n) {
  SuperalgebraSpec g;
  g.name = name;
  g.field = &CyclotomicField::get(field_order);
  g.dim = dim;
  g.parity.assign(dim, Parity::Even);
  g.structure = StructureConstants(dim);
  g.d = Matrix(dim, dim);
  g.sigma = Matrix::identity(dim);
  g.sigma_order = n;
  return g;
}

SuperalgebraSpec so_ltimes_cm(int m) {
  // Basis: J_ab (a < b) as E_ab - E_ba, then P_1..P_m.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) pairs.push_back({a, b});
  }
  const std::size_t nj = pairs.size();
  const std::size_t dim = nj + static_cast<std::size_t>(m);
  SuperalgebraSpec g = blank("galilean_m" + std::to_string(m), 1, dim, 1);
  auto as_matrix = [&](std::size_t k) {
    Matrix x(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    x(static_cast<std::size_t>(pairs[k].first), static_cast<std::size_t>(pairs[k].second)) = 1;
    x(static_cast<std::size_t>(pairs[k].second), static_cast<std::size_t>(pairs[k].first)) = -1;
    return x;
  };
  for (std::size_t u = 0; u < nj; ++u) {
    Matrix xu = as_matrix(u);
    for (std::size_t v = 0; v < nj; ++v) {
      Matrix c = xu * as_matrix(v) - as_matrix(v) * xu;
      for (std::size_t k = 0; k < nj; ++k) {
        g.structure(u, v, k) = c(static_cast<std::size_t>(pairs[k].first), static_cast<std::size_t>(pairs[k].second));
      }
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c) {
      for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
        if (xu(r, c).is_zero()) continue;
        g.structure(u, nj + c, nj + r) = xu(r, c);
        g.structure(nj + c, u, nj + r) = -xu(r, c);
      }
    }
  }
  for (std::size_t c = nj; c < dim; ++c) g.d(c, c) = -1;
  return g;
}

}  // namespace

std::string ExampleId::label() const {
  std::ostringstream os;
  os << name;
  const auto& p = params;
  if (name == "onedim" || name == "fermion" || name == "bms_family" || name == "jordan") {
    os << "(beta=" << beta_text(p.beta) << ",n=" << p.n << ",i=" << p.i << ")";
  } else if (name == "gap_p") {
    os << "(p=" << p.p << ")";
  } else if (name == "simple_lie") {
    os << "(n=" << p.n << ")";
  } else if (name == "galilean") {
    os << "(m=" << p.m << ")";
  }
  return os.str();
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"onedim",     "gap_p",    "fermion", "bms_family",
                                                 "simple_lie", "galilean", "jordan"};
  return names;
}

void check_params(const ExampleId& id) {
  const auto& p = id.params;
  if (id.name == "onedim" || id.name == "fermion" || id.name == "jordan") {
    check_twist(id);
    require(p.beta != 1, id, "beta must not be 1");
  } else if (id.name == "bms_family") {
    check_twist(id);
    require(p.beta != 1 && p.beta != mpq_class(1, 2), id, "beta must not be 1 or 1/2");
  } else if (id.name == "gap_p") {
    require(p.p > 1, id, "p must be > 1");
  } else if (id.name == "simple_lie") {
    require(p.n == 1 || p.n == 2, id, "n must be 1 (identity) or 2 (Chevalley involution)");
  } else if (id.name == "galilean") {
    require(p.m >= 1 && p.m <= 4, id, "m must lie in 1..4");
  } else {
    throw CatalogError("unknown example '" + id.name + "'");
  }
}

SuperalgebraSpec make_example(const ExampleId& id) {
  check_params(id);
  const auto& p = id.params;
  SuperalgebraSpec g;
  if (id.name == "onedim" || id.name == "fermion") {
    g = blank(id.name, p.n, 1, p.n);
    if (id.name == "fermion") g.parity[0] = Parity::Odd;
    g.d(0, 0) = p.beta;
    g.sigma(0, 0) = g.field->root_of_unity(p.n, p.i);
  } else if (id.name == "gap_p") {
    g = blank("gap_" + std::to_string(p.p), p.p, static_cast<std::size_t>(p.p - 1), p.p);
    for (int k = 1; k < p.p; ++k) {
      g.sigma(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) = g.field->root_of_unity(p.p, k);
    }
  } else if (id.name == "bms_family") {
    // Basis h (even), e (odd) with [e,e] = h.
    g = blank(id.name, p.n, 2, p.n);
    g.parity[1] = Parity::Odd;
    g.structure(1, 1, 0) = 1;
    g.d(0, 0) = FieldElem(p.beta) * FieldElem(2);
    g.d(1, 1) = p.beta;
    g.sigma(0, 0) = g.field->root_of_unity(p.n, 2 * p.i);
    g.sigma(1, 1) = g.field->root_of_unity(p.n, p.i);
  } else if (id.name == "simple_lie") {
    // sl2 with basis h, e, f.
    g = blank(p.n == 1 ? "sl2" : "sl2_chevalley", p.n, 3, p.n);
    g.structure(0, 1, 1) = 2;
    g.structure(1, 0, 1) = -2;
    g.structure(0, 2, 2) = -2;
    g.structure(2, 0, 2) = 2;
    g.structure(1, 2, 0) = 1;
    g.structure(2, 1, 0) = -1;
    if (p.n == 2) {
      g.sigma = Matrix(3, 3);
      g.sigma(0, 0) = -1;
      g.sigma(1, 2) = 1;
      g.sigma(2, 1) = 1;
    }
  } else if (id.name == "galilean") {
    if (p.m == 1) {
      ExampleId w{"onedim", {}};
      w.params.beta = -1;
      g = make_example(w);
      g.name = "galilean_m1";
      return g;
    }
    g = so_ltimes_cm(p.m);
  } else if (id.name == "jordan") {
    g = blank(id.name, p.n, 2, p.n);
    g.d(0, 0) = p.beta;
    g.d(1, 1) = p.beta;
    g.d(0, 1) = 1;
    FieldElem w = g.field->root_of_unity(p.n, p.i);
    g.sigma(0, 0) = w;
    g.sigma(1, 1) = w;
  }
  validate_all(g);
  return g;
}

ExpectedTable expected_h2(const ExampleId& id) {
  check_params(id);
  const auto& p = id.params;
  ExpectedTable t;
  auto& n = t.dims.n;
  const std::size_t E = 0, O = 1;
  // Twist ratio i/n, compared exactly.
  const mpq_class ratio = make_q(p.i, p.n);
  const mpq_class half(1, 2), third(1, 3), two_thirds(2, 3);
  const bool untwisted = p.i == 0;
  if (id.name == "onedim") {
    n[0][E] = (p.beta == -1 && untwisted) ? 1 : 0;
    n[1][E] = (p.beta == 0 && untwisted) ? 2 : (p.beta == 0 && ratio == half) ? 1 : 0;
  } else if (id.name == "gap_p") {
    n[1][E] = static_cast<std::size_t>(p.p / 2);
  } else if (id.name == "fermion") {
    n[0][O] = (p.beta == -1 && untwisted) ? 1 : 0;
    n[1][O] = (p.beta == 0 && untwisted) ? 1 : 0;
    n[2][E] = (p.beta == half && (untwisted || ratio == half)) ? 1 : 0;
  } else if (id.name == "bms_family") {
    n[0][O] = (untwisted && p.beta == -1) ? 1 : 0;
    n[0][E] = (p.beta == -half && (untwisted || ratio == half)) ? 1 : 0;
    n[1][O] = (untwisted && p.beta == 0) ? 2 : (p.beta == 0 && (ratio == third || ratio == two_thirds)) ? 1 : 0;
  } else if (id.name == "simple_lie") {
    n[1][E] = 1;
  } else if (id.name == "galilean") {
    if (p.m == 1) {
      n[0][E] = 1;
    } else {
      n[1][E] = (p.m == 3) ? 1 : 2;
    }
  } else if (id.name == "jordan") {
    n[0][E] = (p.beta == -1 && p.n == 1) ? 1 : 0;
    n[1][E] = (p.beta == 0 && p.n == 1) ? 2 : (p.beta == 0 && ratio == half) ? 1 : 0;
    n[2][E] = (p.beta == half && (untwisted || ratio == half)) ? 1 : 0;
    if (p.n == 1 && (p.beta == -1 || p.beta == half)) {
      t.note = "total table lists beta in {1, 1/2} for n=1; beta=1 is excluded by the eigenvalue condition, "
               "the sub-tables give beta=-1";
    }
    if (p.beta == half && untwisted) {
      if (!t.note.empty()) t.note += "; ";
      t.note += "cocycle sub-table lists i/n in {1, 1/2}; read as i/n in {0, 1/2}";
    }
  }
  t.total = t.dims.total();
  return t;
}

std::vector<ExampleId> family_grid(const std::string& name) {
  std::vector<ExampleId> out;
  auto twisted = [&](const std::string& fam, const std::vector<std::pair<int, int>>& twists) {
    for (const auto& b : beta_samples()) {
      for (const auto& [n, i] : twists) {
        ExampleId id{fam, {}};
        id.params.beta = b;
        id.params.n = n;
        id.params.i = i;
        try {
          check_params(id);
        } catch (const CatalogError&) {
          continue;
        }
        out.push_back(id);
      }
    }
  };
  if (name == "onedim" || name == "fermion" || name == "jordan") {
    twisted(name, {{1, 0}, {2, 1}, {3, 1}});
  } else if (name == "bms_family") {
    twisted(name, twist_samples());
  } else if (name == "gap_p") {
    for (int p = 2; p <= 7; ++p) {
      ExampleId id{name, {}};
      id.params.p = p;
      out.push_back(id);
    }
  } else if (name == "simple_lie") {
    for (int n : {1, 2}) {
      ExampleId id{name, {}};
      id.params.n = n;
      out.push_back(id);
    }
  } else if (name == "galilean") {
    for (int m = 1; m <= 4; ++m) {
      ExampleId id{name, {}};
      id.params.m = m;
      out.push_back(id);
    }
  } else {
    throw CatalogError("unknown example '" + name + "'");
  }
  return out;
}

std::vector<ExampleId> regression_grid() {
  std::vector<ExampleId> out;
  for (const auto& name : example_names()) {
    for (auto& id : family_grid(name)) out.push_back(std::move(id));
  }
  return out;
}

}  // namespace avsa
