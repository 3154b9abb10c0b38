#include "avsa/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace avsa {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  return quot;
}

// Quotient and remainder in Q[x]; divisor must be nonzero and trimmed.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) r[shift + t] -= c * b[t];
    trim(r);
  }
}

QPoly mul_poly(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPoly sub_poly(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Reduce an arbitrary-length coefficient vector modulo the monic modulus.
void reduce_into(std::vector<mpq_class>& c, const std::vector<mpz_class>& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    mpq_class lead = c[i];
    for (std::size_t t = 0; t <= deg; ++t) c[i - deg + t] -= lead * modulus[t];
  }
  c.resize(deg, mpq_class(0));
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, mpz_class(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

const CyclotomicField& CyclotomicField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  if (order < 1) throw std::invalid_argument("field order must be >= 1");
  std::lock_guard lock(mu);
  auto& slot = registry[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

FieldElem CyclotomicField::zero() const { return FieldElem(*this, {}); }
FieldElem CyclotomicField::one() const { return FieldElem(*this, {mpq_class(1)}); }
FieldElem CyclotomicField::rational(const mpq_class& q) const { return FieldElem(*this, {q}); }

FieldElem CyclotomicField::root_power(long k) const {
  long e = k % order_;
  if (e < 0) e += order_;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
  c.back() = 1;
  return FieldElem(*this, std::move(c));
}

FieldElem CyclotomicField::root_of_unity(int n, long k) const {
  if (n < 1 || order_ % n != 0) {
    throw std::invalid_argument("root of unity of order " + std::to_string(n) + " is not in Q(w_" +
                                std::to_string(order_) + ")");
  }
  return root_power(k * (order_ / n));
}

FieldElem::FieldElem() : field_(&CyclotomicField::rationals()), coeffs_(1, mpq_class(0)) {}

FieldElem::FieldElem(long value) : field_(&CyclotomicField::rationals()), coeffs_(1, mpq_class(value)) {}

FieldElem::FieldElem(const mpq_class& value) : field_(&CyclotomicField::rationals()), coeffs_(1, value) {
  coeffs_[0].canonicalize();
}

FieldElem::FieldElem(const CyclotomicField& field, std::vector<mpq_class> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  reduce_into(coeffs_, field.modulus());
}

bool FieldElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

const mpq_class& FieldElem::rational() const {
  if (!is_rational()) throw std::domain_error("scalar " + str() + " is not rational");
  return coeffs_[0];
}

void FieldElem::promote_to(const CyclotomicField& other) {
  mpq_class q = coeffs_[0];
  field_ = &other;
  coeffs_.assign(static_cast<std::size_t>(other.degree()), mpq_class(0));
  coeffs_[0] = q;
}

const CyclotomicField& FieldElem::common_field(const FieldElem& rhs) {
  if (field_ == rhs.field_) return *field_;
  if (field_->order() == 1) {
    promote_to(*rhs.field_);
    return *field_;
  }
  if (rhs.field_->order() == 1) return *field_;
  throw std::invalid_argument("scalars from Q(w_" + std::to_string(field_->order()) + ") and Q(w_" +
                              std::to_string(rhs.field_->order()) + ") cannot be combined");
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  common_field(rhs);
  if (rhs.field_ == field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    coeffs_[0] += rhs.coeffs_[0];
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  common_field(rhs);
  if (rhs.field_ == field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  } else {
    coeffs_[0] -= rhs.coeffs_[0];
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  const CyclotomicField& f = common_field(rhs);
  if (rhs.field_ != field_ || f.degree() == 1) {
    const mpq_class& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (rhs.is_rational()) {
    const mpq_class& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    mpq_class s = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  std::vector<mpq_class> prod = mul_poly(coeffs_, rhs.coeffs_);
  reduce_into(prod, f.modulus());
  coeffs_ = std::move(prod);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) {
    FieldElem out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid: find u with u * a = 1 mod modulus.
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub_poly(s0, mul_poly(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return FieldElem(*field_, std::move(s1));
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this *= rhs.inverse(); }

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.field_->order() == 1 || b.field_->order() == 1) {
    return a.is_rational() && b.is_rational() && a.coeffs_[0] == b.coeffs_[0];
  }
  return false;
}

FieldElem FieldElem::embed(const CyclotomicField& target) const {
  if (&target == field_) return *this;
  const int k = field_->order();
  if (target.order() % k != 0) {
    throw std::invalid_argument("Q(w_" + std::to_string(k) + ") does not embed in Q(w_" +
                                std::to_string(target.order()) + ")");
  }
  FieldElem out = target.zero();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    out += target.root_of_unity(k, static_cast<long>(j)) * FieldElem(coeffs_[j]);
  }
  return out;
}

std::string FieldElem::str() const {
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpq_class& c = coeffs_[j];
    if (c == 0) continue;
    std::string wpow;
    if (j == 1) wpow = "w";
    if (j > 1) wpow = "w^" + std::to_string(j);
    mpq_class mag = abs(c);
    if (first) {
      if (j == 0) {
        out += c.get_str();
      } else if (c == 1) {
        out += wpow;
      } else {
        out += c.get_str() + "*" + wpow;
      }
    } else {
      out += (c < 0) ? "-" : "+";
      if (j == 0) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += wpow;
      } else {
        out += mag.get_str() + "*" + wpow;
      }
    }
    first = false;
  }
  return first ? std::string("0") : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const CyclotomicField& field) : field_(field) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  FieldElem parse() {
    if (src_.empty()) fail("empty scalar");
    FieldElem acc = term();
    while (pos_ < src_.size()) {
      char op = src_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      FieldElem t = term();
      if (op == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarSyntaxError("scalar syntax error at offset " + std::to_string(pos_) + " in '" + src_ +
                            "': " + what);
  }

  bool at(char ch) const { return pos_ < src_.size() && src_[pos_] == ch; }

  mpz_class uint() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(src_.substr(start, pos_ - start));
  }

  FieldElem factor() {
    bool negate = false;
    if (at('-')) {
      negate = true;
      ++pos_;
    }
    FieldElem value;
    if (at('w')) {
      ++pos_;
      long exponent = 1;
      if (at('^')) {
        ++pos_;
        mpz_class e = uint();
        mpz_class reduced = e % field_.order();
        exponent = reduced.get_si();
      }
      value = field_.root_power(exponent);
    } else {
      mpz_class num = uint();
      mpz_class den = 1;
      if (at('/')) {
        ++pos_;
        den = uint();
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      value = field_.rational(q);
    }
    return negate ? -value : value;
  }

  FieldElem term() {
    FieldElem acc = factor();
    while (at('*')) {
      ++pos_;
      acc *= factor();
    }
    if (acc.field().order() != field_.order()) acc = field_.zero() + acc;
    return acc;
  }

  const CyclotomicField& field_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text, const CyclotomicField& field) {
  return ScalarParser(text, field).parse();
}

FieldElem parse_scalar(std::string_view text, int field_order) {
  return FieldElem::parse(text, CyclotomicField::get(field_order));
}

std::string render_scalar(const FieldElem& x) { return x.str(); }

}  // namespace avsa
