#pragma once

#include <array>
#include <string>
#include <vector>

#include "avsa/superalgebra.hpp"

namespace avsa {

inline std::size_t parity_slot(Parity p) { return static_cast<std::size_t>(p); }

/// Super-skew 2-cocycles alpha on s of a fixed target parity with
/// alpha(dx,y) + alpha(x,dy) = alpha(x,y) and alpha(sigma x, sigma y) = alpha(x,y).
/// Entry (i,j) of each matrix is alpha(e_i, e_j) in input coordinates.
struct CocycleBasis {
  Parity target_parity = Parity::Even;
  std::vector<Matrix> vectors;
  /// dim of (coboundaries) intersected with the span of `vectors`; zero for
  /// every input satisfying the standing hypotheses.
  std::size_t coboundary_overlap = 0;
};

/// Super-symmetric invariant forms on g-double-dot that are sigma-invariant,
/// of a fixed parity, with B(partial, partial) = 0. The distinguished form
/// (B(partial, partial) = 1, zero elsewhere) is recorded separately.
struct InvFormBasis {
  Parity target_parity = Parity::Even;
  std::vector<Matrix> vectors;
  bool has_distinguished = false;
  Matrix distinguished;
};

/// sigma-fixed functionals on s of a fixed parity annihilating
/// S = (d+1)s + [(d+1/2)s, s] + [s,[s,s]]; covectors in input coordinates.
struct QuotientFunctionals {
  Parity target_parity = Parity::Even;
  std::vector<Vector> vectors;
};

/// Kind of a central generator: the distinguished z, or one built from the
/// quotient functionals (-1), invariant forms (0), or cocycles (1).
enum class CentralKind { Virasoro, Functional, Form, Cocycle };

struct CentralLabel {
  std::string name;
  CentralKind kind = CentralKind::Virasoro;
  Parity parity = Parity::Even;
  /// Index into the basis of the matching kind and parity.
  std::size_t index = 0;
};

struct DimensionTable {
  /// n[kind][parity] with kind 0,1,2 standing for -1, 0, 1.
  std::array<std::array<std::size_t, 2>, 3> n{};
  std::size_t coboundary_overlap = 0;
  std::size_t total() const;
  std::size_t at(int kind, Parity p) const { return n[static_cast<std::size_t>(kind + 1)][parity_slot(p)]; }
  bool operator==(const DimensionTable& o) const { return n == o.n; }
};

struct ExtensionData {
  SuperalgebraSpec spec;
  SigmaGrading grading;
  GddAlgebra gdd;
  std::array<QuotientFunctionals, 2> rho;
  std::array<InvFormBasis, 2> forms;
  std::array<CocycleBasis, 2> cocycles;
  std::vector<CentralLabel> labels;
  DimensionTable dims;
};

std::array<CocycleBasis, 2> invariant_cocycles(const SuperalgebraSpec& g);
std::array<InvFormBasis, 2> invariant_forms(const GddAlgebra& gdd);
std::array<QuotientFunctionals, 2> quotient_functionals(const SuperalgebraSpec& g);
DimensionTable h2_summary(const SuperalgebraSpec& g);
ExtensionData build_extension(const SuperalgebraSpec& g);

/// Checks used by the test suite and the CLI.
bool is_super_cocycle(const SuperalgebraSpec& g, const Matrix& alpha);
bool is_invariant_form(const SuperalgebraSpec& g, const Matrix& b);

}  // namespace avsa
