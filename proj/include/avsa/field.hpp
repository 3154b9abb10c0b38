#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avsa {

class FieldElem;

/// Thrown when a scalar expression does not match the scalar grammar.
class ScalarSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cyclotomic field Q(w) where w is a primitive root of unity of the
/// given order. Elements are polynomials in w of degree < phi(order), reduced
/// modulo the cyclotomic polynomial.
///
/// Fields are interned: get() returns the same object for the same order for
/// the lifetime of the process, so elements can hold a plain pointer to it.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);
  static const CyclotomicField& rationals() { return get(1); }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Monic cyclotomic polynomial, constant term first.
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem rational(const mpq_class& q) const;
  /// w^k for the generating root w of this field; k may be negative.
  FieldElem root_power(long k) const;
  /// w_n^k where w_n = w^(order/n). Requires n | order.
  FieldElem root_of_unity(int n, long k) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  std::vector<mpz_class> modulus_;
};

int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// An element of Q(w). Elements of the order-1 field are plain rationals and
/// combine with elements of any other field; mixing two different
/// non-trivial fields throws std::invalid_argument.
class FieldElem {
 public:
  FieldElem();
  FieldElem(long value);  // NOLINT(google-explicit-constructor)
  FieldElem(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  /// Reduces `coeffs` (constant term first, any length) modulo the field polynomial.
  FieldElem(const CyclotomicField& field, std::vector<mpq_class> coeffs);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  const mpq_class& rational() const;

  FieldElem inverse() const;
  /// Element re-expressed in a (possibly larger) field of order divisible
  /// by this element's field order.
  FieldElem embed(const CyclotomicField& target) const;

  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);
  FieldElem operator-() const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Canonical rendering in the scalar grammar, e.g. "1/2+3*w-w^2".
  std::string str() const;

  /// Parses the scalar grammar with `w` read as the generator of `field`.
  static FieldElem parse(std::string_view text, const CyclotomicField& field);

 private:
  void promote_to(const CyclotomicField& other);
  const CyclotomicField& common_field(const FieldElem& rhs);

  const CyclotomicField* field_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// num/den in lowest terms (gmpxx does not reduce two-argument construction).
inline mpq_class make_q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

FieldElem parse_scalar(std::string_view text, int field_order);
std::string render_scalar(const FieldElem& x);

}  // namespace avsa
