#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avsa/algebra_io.hpp"
#include "avsa/loopreal.hpp"

namespace avsa {

/// Finite-dimensional module over g-double-dot: the action of partial and of
/// each input basis element of s, as r x r matrices.
struct GddModule {
  SuperalgebraSpec algebra;
  std::size_t dim = 0;
  std::vector<Parity> parity;
  Matrix partial;
  std::vector<Matrix> actions;
  /// Optional Z_n-grading: residue of each basis vector.
  std::optional<std::vector<int>> grading;

  /// Action matrix of a coordinate vector of s.
  Matrix action_of(const Vector& x) const;
};

/// Reads the module document (no validation).
GddModule parse_module(const json& doc, const SuperalgebraSpec& g);
json module_to_json(const GddModule& v);

/// Relation checks; witnesses use 1-based generator indices with partial
/// numbered dim(s) + 1.
std::vector<Violation> validate_module(const GddModule& v);
/// parse_module followed by validate_module; throws ValidationError.
GddModule build_gdd_module(const json& doc, const SuperalgebraSpec& g);

enum class LoopMode { Gamma, F };

/// Basis vector v_j (x) t^{k/n} of the loop module.
struct ModuleBasis {
  std::size_t j = 0;
  long k = 0;
  bool operator<(const ModuleBasis& o) const { return std::tie(j, k) < std::tie(o.j, o.k); }
  bool operator==(const ModuleBasis& o) const { return j == o.j && k == o.k; }
};

using ModuleVector = std::map<ModuleBasis, FieldElem>;

/// Truncation of Gamma(V, lambda) (or its graded piece F(V, lambda)) to
/// degrees |k/n| <= M, together with the truncated algebra acting on it.
class LoopWindow {
 public:
  LoopWindow(GddModule v, FieldElem lambda, int window, LoopMode mode);

  const GddModule& module() const { return v_; }
  const FieldElem& lambda() const { return lambda_; }
  int window() const { return window_; }
  int n() const { return n_; }
  LoopMode mode() const { return mode_; }
  const TruncatedAlgebra& algebra() const { return *t_; }
  const std::vector<ModuleBasis>& basis() const { return basis_; }
  bool contains(const ModuleBasis& b) const;
  std::string name(const ModuleBasis& b) const;

  /// Action of action matrix for eigenbasis vector b of s.
  const Matrix& eigen_action(std::size_t b) const { return eigen_actions_[b]; }

 private:
  GddModule v_;
  FieldElem lambda_;
  int window_;
  int n_;
  LoopMode mode_;
  std::shared_ptr<TruncatedAlgebra> t_;
  std::vector<Matrix> eigen_actions_;
  std::vector<ModuleBasis> basis_;
};

/// Action of the algebra label `x` on a basis vector; nullopt when the
/// result leaves the window.
std::optional<ModuleVector> gamma_action(const LoopWindow& l, std::size_t x, const ModuleBasis& w);
std::optional<ModuleVector> gamma_action(const LoopWindow& l, std::size_t x, const ModuleVector& w);
std::optional<ModuleVector> gamma_action(const LoopWindow& l, const AlgElement& x, const ModuleVector& w);

struct ModuleWitness {
  std::size_t u1 = 0, u2 = 0;
  ModuleBasis w;
  ModuleVector defect;
};

struct ModuleCheckReport {
  std::size_t checked = 0;
  std::vector<ModuleWitness> witnesses;
  bool pass() const { return witnesses.empty(); }
};

/// [u1,u2].w = u1.(u2.w) - (-1)^{|u1||u2|} u2.(u1.w) for all in-window data.
ModuleCheckReport module_axiom_check(const LoopWindow& l);

/// True when every central label acts as zero on every window vector.
bool central_acts_trivially(const LoopWindow& l);

struct ComponentInfo {
  int index = 0;
  std::vector<ModuleBasis> vectors;
  /// Weight (scaled degree k) -> multiplicity.
  std::map<long, std::size_t> weights;
  bool closed = false;
};

/// The n components M_i = sum_j V_[j] (x) t^{(j+i)/n} of the window, each
/// checked for closure. Throws std::invalid_argument when V is ungraded.
std::vector<ComponentInfo> f_components(const LoopWindow& l);

enum class Simplicity { Simple, Reducible, Unknown };
const char* simplicity_name(Simplicity s);

struct SimplicityReport {
  Simplicity verdict = Simplicity::Unknown;
  /// Dimension of the unital algebra generated by the action matrices.
  std::size_t algebra_dim = 0;
  /// Basis of a proper invariant subspace when Reducible.
  std::vector<Vector> witness;
};

/// Burnside test on V with generators partial, the s-actions, the parity
/// projections and (if graded) the grading projections.
SimplicityReport graded_simplicity(const GddModule& v);
/// Generators used by graded_simplicity.
std::vector<Matrix> simplicity_generators(const GddModule& v);
/// True if the span of `w` is invariant under every generator and proper.
bool verify_invariant_subspace(const GddModule& v, const std::vector<Vector>& w);

enum class OmegaMode { Vir, Mixed };

struct OmegaWitness {
  /// vir: (k, s); mixed: (eigenbasis index b, scaled degree of x(a), p).
  std::vector<long> params;
  ModuleBasis w;
  ModuleVector value;
};

struct OmegaReport {
  std::size_t evaluations = 0;
  std::vector<OmegaWitness> witnesses;
  bool pass() const { return evaluations > 0 && witnesses.empty(); }
};

OmegaReport omega_check(const LoopWindow& l, int m, OmegaMode mode);

}  // namespace avsa
