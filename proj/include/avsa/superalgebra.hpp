#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "avsa/field.hpp"
#include "avsa/linalg.hpp"

namespace avsa {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
/// (-1)^{|a||b|}
inline int super_sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }
inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// One failed invariant, with 1-based basis indices as witness.
struct Violation {
  std::string check;
  std::vector<int> witness;
  std::string detail;
};

std::string describe(const Violation& v);

/// Raised when input data parses but violates an algebraic invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised for malformed input (bad syntax, indices out of range, missing fields).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense structure constants c(i,j,k) with [e_i, e_j] = sum_k c(i,j,k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  FieldElem& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const FieldElem& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// Coordinates of [e_i, e_j].
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  bool operator==(const StructureConstants& o) const;

 private:
  std::size_t dim_ = 0;
  std::vector<FieldElem> c_;
};

/// Finite-dimensional Lie superalgebra with an even derivation d and an
/// automorphism sigma of declared order. Linear maps use the column
/// convention: d(e_j) = sum_i d(i, j) e_i.
struct SuperalgebraSpec {
  std::string name;
  const CyclotomicField* field = &CyclotomicField::rationals();
  std::size_t dim = 0;
  std::vector<Parity> parity;
  StructureConstants structure;
  Matrix d;
  Matrix sigma;
  int sigma_order = 1;

  /// Bracket of two coordinate vectors (bilinear extension).
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Parity of a homogeneous coordinate vector; Even for zero.
  Parity parity_of(const Vector& x) const;
};

/// Exhaustive structural checks: super-skew symmetry, parity homogeneity,
/// super-Jacobi on all ordered basis triples.
std::vector<Violation> validate_structure(const SuperalgebraSpec& g);
/// Leibniz rule on all basis pairs, evenness, and det(d - 1) != 0.
std::vector<Violation> validate_derivation(const SuperalgebraSpec& g);
/// Homomorphism on basis pairs, evenness, exact order, [sigma, d] = 0, and
/// that the field contains the n-th roots of unity.
std::vector<Violation> validate_automorphism(const SuperalgebraSpec& g);
/// All of the above; throws ValidationError if anything fails.
void validate_all(const SuperalgebraSpec& g);

/// Decomposition of g into sigma-eigenspaces g_[i] = ker(sigma - w_n^i).
struct SigmaGrading {
  int n = 1;
  /// Per residue i, a basis of g_[i] in input coordinates.
  std::vector<std::vector<Vector>> components;
  /// Columns are the concatenated eigenbasis vectors (residue-major order).
  Matrix change_of_basis;
  Matrix inverse_change;
  /// Residue and parity of each eigenbasis vector.
  std::vector<int> residue;
  std::vector<Parity> parity;
  /// The algebra re-expressed in the eigenbasis (sigma becomes diagonal).
  SuperalgebraSpec eigen;

  std::size_t size() const { return residue.size(); }
  Vector eigenvector(std::size_t b) const { return change_of_basis.column(b); }
};

SigmaGrading sigma_components(const SuperalgebraSpec& g);

/// g with the even element "partial" appended as the last basis vector:
/// [partial, x] = d(x), sigma(partial) = partial.
struct GddAlgebra {
  SuperalgebraSpec algebra;
  std::size_t partial_index = 0;
};

GddAlgebra build_gdd(const SuperalgebraSpec& g);

/// Structure constants, d and sigma transported along x -> P x, where the
/// columns of P give the new basis in old coordinates. P must preserve parity.
SuperalgebraSpec change_basis(const SuperalgebraSpec& g, const Matrix& p);

/// sigma^k by repeated multiplication.
Matrix matrix_power(const Matrix& m, int k);

}  // namespace avsa
