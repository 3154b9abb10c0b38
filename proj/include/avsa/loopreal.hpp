#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "avsa/centralext.hpp"

namespace avsa {

/// Basis label of the truncated algebra. Degrees are stored multiplied by
/// the twist order n, so every degree is an integer:
///   Vir(i)      -> l_i,                    degree n*i
///   Loop(b, k)  -> x_b (x) t^{k/n},        degree k, requires k = residue(b) mod n
///   Central(c)  -> c-th central generator, degree 0
struct Label {
  enum class Kind { Vir, Loop, Central };
  Kind kind = Kind::Vir;
  long k = 0;
  std::size_t b = 0;

  static Label vir(long i) { return {Kind::Vir, i, 0}; }
  static Label loop(std::size_t b, long k) { return {Kind::Loop, k, b}; }
  static Label central(std::size_t c) { return {Kind::Central, 0, c}; }
  auto key() const { return std::make_tuple(static_cast<int>(kind), k, b); }
  bool operator<(const Label& o) const { return key() < o.key(); }
  bool operator==(const Label& o) const { return key() == o.key(); }
};

/// Sparse element: label index -> nonzero coefficient.
using AlgElement = std::map<std::size_t, FieldElem>;

void add_term(AlgElement& x, std::size_t label, const FieldElem& c);
AlgElement& add_scaled(AlgElement& y, const FieldElem& a, const AlgElement& x);

/// The graded basis of the extension (or of the centerless algebra) whose
/// labels have |degree| <= N, with exact bracket evaluation.
class TruncatedAlgebra {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t idx) const { return labels_[idx]; }
  int n() const { return n_; }
  int window() const { return window_; }
  bool centerless() const { return centerless_; }
  /// Degree times n.
  long degree(std::size_t idx) const;
  Parity parity(std::size_t idx) const;
  std::optional<std::size_t> find(const Label& l) const;
  std::string name(std::size_t idx) const;
  /// Degree of a label as a rational, for reports.
  mpq_class degree_q(std::size_t idx) const { return make_q(degree(idx), n_); }

  std::size_t count(Label::Kind kind) const;
  const SigmaGrading& grading() const { return grading_; }
  const ExtensionData* extension() const { return ext_.get(); }
  /// Index of the central label z, if present.
  std::optional<std::size_t> z_index() const;

  /// Bracket of two basis labels; nullopt when the result leaves the window.
  std::optional<AlgElement> bracket(std::size_t u, std::size_t v) const;
  std::optional<AlgElement> bracket(const AlgElement& u, const AlgElement& v) const;

  /// Residue class of eigenbasis vector b and the transported structure.
  int residue(std::size_t b) const { return grading_.residue[b]; }
  const SuperalgebraSpec& eigen() const { return grading_.eigen; }
  const SuperalgebraSpec& spec() const { return spec_; }

  friend TruncatedAlgebra truncate(const ExtensionData& ext, int window);
  friend TruncatedAlgebra truncate_centerless(const SuperalgebraSpec& g, int window);

 private:
  void enumerate(bool with_centrals);
  void central_terms_vir_loop(AlgElement& out, long i, std::size_t b) const;
  void central_terms_loop_loop(AlgElement& out, std::size_t b, long k, std::size_t c) const;

  int n_ = 1;
  int window_ = 0;
  bool centerless_ = true;
  SigmaGrading grading_;
  SuperalgebraSpec spec_;
  std::shared_ptr<const ExtensionData> ext_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::size_t central_offset_ = 0;
  // Cocycle data expressed in the sigma-eigenbasis, one entry per central label.
  std::vector<Vector> rho_e_;        // functional labels: rho(x_b)
  std::vector<Matrix> form_e_;       // form labels: B on (x_b, x_c), index m = partial
  std::vector<Matrix> cocycle_e_;    // cocycle labels: alpha(x_b, x_c)
};

/// Requires window >= 2.
TruncatedAlgebra truncate(const ExtensionData& ext, int window);
TruncatedAlgebra truncate_centerless(const SuperalgebraSpec& g, int window);

/// All basis brackets of a truncated algebra, precomputed and editable (the
/// test suite corrupts entries to confirm the checker notices).
class BracketTable {
 public:
  explicit BracketTable(const TruncatedAlgebra& t);
  const std::optional<AlgElement>& at(std::size_t u, std::size_t v) const { return table_[u * size_ + v]; }
  void set(std::size_t u, std::size_t v, std::optional<AlgElement> value) { table_[u * size_ + v] = std::move(value); }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::vector<std::optional<AlgElement>> table_;
};

struct JacobiWitness {
  std::size_t u, v, w;
  AlgElement defect;
};

struct JacobiReport {
  std::size_t labels = 0;
  std::size_t admissible_triples = 0;
  std::vector<JacobiWitness> witnesses;
  bool pass() const { return witnesses.empty(); }
};

/// True when every pairwise degree sum and the triple sum lie in the window.
bool admissible(const TruncatedAlgebra& t, std::size_t u, std::size_t v, std::size_t w);

JacobiReport jacobi_check(const TruncatedAlgebra& t);
JacobiReport jacobi_check(const TruncatedAlgebra& t, const BracketTable& table);

/// Datum for pi_eval: a functional on s (kind -1), an invariant form on
/// g-double-dot (kind 0) or a cocycle on s (kind 1), in input coordinates.
struct PiDatum {
  int kind = 0;
  Vector functional;
  Matrix form;
};

/// Value of the cocycle pi_kind(datum) on a pair of centerless labels.
FieldElem pi_eval(const TruncatedAlgebra& t, const PiDatum& datum, std::size_t u, std::size_t v);

/// Checks the cocycle identity of a bilinear form on the centerless labels of
/// `t` over every admissible triple. Returns the first failing triple.
template <class Form>
std::optional<std::array<std::size_t, 3>> first_cocycle_failure(const TruncatedAlgebra& t, Form&& alpha);

struct OracleReport {
  int window = 0;
  int inner = 0;
  std::size_t labels = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t raw_dim = 0;
  std::size_t projected_dim = 0;
};

/// Brute-force normalized 2-cocycles of the centerless truncation, counted
/// after projection to pairs whose labels both have |degree| <= inner.
/// Requires inner <= window - 2.
OracleReport oracle_h2(const SuperalgebraSpec& g, int window, int inner);

// ---------------------------------------------------------------------------

template <class Form>
std::optional<std::array<std::size_t, 3>> first_cocycle_failure(const TruncatedAlgebra& t, Form&& alpha) {
  auto eval = [&](std::size_t x, const AlgElement& y) {
    FieldElem s;
    for (const auto& [idx, c] : y) s += c * alpha(x, idx);
    return s;
  };
  auto eval_left = [&](const AlgElement& x, std::size_t y) {
    FieldElem s;
    for (const auto& [idx, c] : x) s += c * alpha(idx, y);
    return s;
  };
  const std::size_t L = t.size();
  for (std::size_t x = 0; x < L; ++x) {
    for (std::size_t y = 0; y < L; ++y) {
      for (std::size_t z = 0; z < L; ++z) {
        if (!admissible(t, x, y, z)) continue;
        // alpha(x,[y,z]) = alpha([x,y],z) + (-1)^{|x||y|} alpha(y,[x,z])
        auto yz = t.bracket(y, z), xy = t.bracket(x, y), xz = t.bracket(x, z);
        FieldElem lhs = eval(x, *yz);
        FieldElem rhs = eval_left(*xy, z) + FieldElem(super_sign(t.parity(x), t.parity(y))) * eval(y, *xz);
        if (!(lhs == rhs)) return std::array<std::size_t, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace avsa
