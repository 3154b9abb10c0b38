#include <doctest.h>

#include <random>

#include "avsa/field.hpp"

using avsa::CyclotomicField;
using avsa::FieldElem;
using avsa::parse_scalar;

namespace {

FieldElem random_elem(std::mt19937& rng, const CyclotomicField& f) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return FieldElem(f, c);
}

}  // namespace

TEST_CASE("parse_scalar examples") {
  CHECK(parse_scalar("1/2", 1) == FieldElem(mpq_class(1, 2)));
  CHECK(parse_scalar("w*w", 4) == FieldElem(-1));
  CHECK(parse_scalar("w^2+1", 3) == -parse_scalar("w", 3));
  CHECK(parse_scalar(" - 3 / 6 ", 1) == FieldElem(mpq_class(-1, 2)));
  CHECK(parse_scalar("w^5", 5) == FieldElem(1));
  CHECK(parse_scalar("2*w^3 - w", 1) == FieldElem(1));
}

TEST_CASE("parse_scalar rejects malformed text") {
  CHECK_THROWS_AS(parse_scalar("", 1), avsa::ScalarSyntaxError);
  CHECK_THROWS_AS(parse_scalar("1/", 1), avsa::ScalarSyntaxError);
  CHECK_THROWS_AS(parse_scalar("x", 1), avsa::ScalarSyntaxError);
  CHECK_THROWS_AS(parse_scalar("1++2", 1), avsa::ScalarSyntaxError);
  CHECK_THROWS_AS(parse_scalar("1/0", 1), avsa::ScalarSyntaxError);
}

TEST_CASE("arithmetic examples") {
  CHECK(FieldElem(mpq_class(1, 2)) + FieldElem(mpq_class(1, 3)) == FieldElem(mpq_class(5, 6)));
  const auto& f5 = CyclotomicField::get(5);
  FieldElem w = f5.root_power(1);
  CHECK((w * w.inverse()).is_one());
  FieldElem i4 = CyclotomicField::get(4).root_power(1);
  CHECK(i4 * i4 == FieldElem(-1));
  CHECK_THROWS_AS(w / FieldElem(0), std::domain_error);
}

TEST_CASE("roots of unity") {
  const auto& f6 = CyclotomicField::get(6);
  for (int n : {1, 2, 3, 6}) {
    FieldElem z = f6.root_of_unity(n, 1);
    FieldElem p = 1;
    for (int k = 1; k <= n; ++k) {
      p *= z;
      if (k < n) CHECK_FALSE(p.is_one());
    }
    CHECK(p.is_one());
  }
  CHECK(f6.root_of_unity(2, 1) == FieldElem(-1));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(12345);
  for (int order : {1, 3, 4, 5, 8, 12}) {
    const auto& f = CyclotomicField::get(order);
    for (int t = 0; t < 40; ++t) {
      FieldElem a = random_elem(rng, f), b = random_elem(rng, f), c = random_elem(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b).coeffs() == (b + a).coeffs());
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("render and parse round-trip") {
  std::mt19937 rng(777);
  for (int order : {1, 2, 3, 4, 5, 7, 12}) {
    const auto& f = CyclotomicField::get(order);
    for (int t = 0; t < 30; ++t) {
      FieldElem a = random_elem(rng, f);
      CHECK(parse_scalar(a.str(), order) == a);
    }
    CHECK(parse_scalar(f.zero().str(), order).is_zero());
    CHECK(parse_scalar((-f.root_power(1)).str(), order) == -f.root_power(1));
  }
  CHECK(parse_scalar("1/2+3*w-w^2", 7).str() == "1/2+3*w-w^2");
}
