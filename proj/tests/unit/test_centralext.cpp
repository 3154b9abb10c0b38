#include <doctest.h>

#include <random>

#include "avsa/catalog.hpp"
#include "avsa/centralext.hpp"

using avsa::ExampleId;
using avsa::FieldElem;
using avsa::Parity;

namespace {

ExampleId twisted(const std::string& name, mpq_class beta, int n, int i) {
  ExampleId id{name, {}};
  id.params.beta = beta;
  id.params.n = n;
  id.params.i = i;
  return id;
}

avsa::SuperalgebraSpec zero_algebra() {
  avsa::SuperalgebraSpec g;
  g.name = "zero";
  g.structure = avsa::StructureConstants(0);
  return g;
}

// Random invertible parity-preserving change of basis, conjugating d and sigma.
avsa::Matrix random_parity_basis(const avsa::SuperalgebraSpec& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-2, 2);
  for (;;) {
    avsa::Matrix p(g.dim, g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
      for (std::size_t j = 0; j < g.dim; ++j) {
        if (g.parity[i] == g.parity[j]) p(i, j) = val(rng);
      }
    }
    if (avsa::rank(p) == g.dim) return p;
  }
}

}  // namespace

TEST_CASE("cocycle examples") {
  auto c = avsa::invariant_cocycles(avsa::make_example(twisted("fermion", mpq_class(1, 2), 1, 0)));
  CHECK(c[0].vectors.size() + c[1].vectors.size() == 1);
  for (auto& id : avsa::family_grid("onedim")) {
    auto cc = avsa::invariant_cocycles(avsa::make_example(id));
    CHECK(cc[0].vectors.size() + cc[1].vectors.size() == 0);
  }
  ExampleId sl2{"simple_lie", {}};
  auto cs = avsa::invariant_cocycles(avsa::make_example(sl2));
  CHECK(cs[0].vectors.size() + cs[1].vectors.size() == 0);
}

TEST_CASE("invariant form examples") {
  auto f0 = avsa::invariant_forms(avsa::build_gdd(zero_algebra()));
  CHECK(f0[0].vectors.empty());
  CHECK(f0[0].has_distinguished);
  auto f1 = avsa::invariant_forms(avsa::build_gdd(avsa::make_example(twisted("onedim", 0, 1, 0))));
  CHECK(f1[0].vectors.size() == 2);
  ExampleId gap3{"gap_p", {}};
  gap3.params.p = 3;
  auto f3 = avsa::invariant_forms(avsa::build_gdd(avsa::make_example(gap3)));
  CHECK(f3[0].vectors.size() == 1);
}

TEST_CASE("quotient functional examples") {
  auto q1 = avsa::quotient_functionals(avsa::make_example(twisted("onedim", -1, 1, 0)));
  CHECK(q1[0].vectors.size() == 1);
  ExampleId sl2{"simple_lie", {}};
  auto q2 = avsa::quotient_functionals(avsa::make_example(sl2));
  CHECK(q2[0].vectors.size() + q2[1].vectors.size() == 0);
  auto q3 = avsa::quotient_functionals(avsa::make_example(twisted("bms_family", mpq_class(-1, 2), 2, 1)));
  CHECK(q3[0].vectors.size() + q3[1].vectors.size() == 1);
}

TEST_CASE("h2_summary examples") {
  CHECK(avsa::h2_summary(avsa::make_example(twisted("onedim", 0, 2, 1))).total() == 2);
  ExampleId gal{"galilean", {}};
  gal.params.m = 2;
  CHECK(avsa::h2_summary(avsa::make_example(gal)).total() == 3);
  CHECK(avsa::h2_summary(zero_algebra()).total() == 1);
}

TEST_CASE("every catalog case matches its expected table") {
  for (const auto& id : avsa::regression_grid()) {
    if (id.name == "galilean" && id.params.m == 4) continue;  // covered by the acceptance suite
    CAPTURE(id.label());
    auto g = avsa::make_example(id);
    auto got = avsa::h2_summary(g);
    auto want = avsa::expected_h2(id);
    CHECK(got.n == want.dims.n);
    CHECK(got.total() == want.total);
    CHECK(got.coboundary_overlap == 0);
  }
}

TEST_CASE("returned bases satisfy their defining identities") {
  for (const auto& id : avsa::regression_grid()) {
    if (id.name == "galilean" && id.params.m >= 3) continue;
    CAPTURE(id.label());
    auto e = avsa::build_extension(avsa::make_example(id));
    for (int s = 0; s < 2; ++s) {
      for (const auto& a : e.cocycles[s].vectors) CHECK(avsa::is_super_cocycle(e.spec, a));
      for (const auto& b : e.forms[s].vectors) CHECK(avsa::is_invariant_form(e.gdd.algebra, b));
    }
    CHECK(avsa::is_invariant_form(e.gdd.algebra, e.forms[0].distinguished));
    CHECK(e.labels.size() == e.dims.total());
    CHECK(e.labels[0].name == "z");
    CHECK(e.labels[0].parity == Parity::Even);
  }
}

TEST_CASE("h2_summary is invariant under change of basis") {
  std::mt19937 rng(99);
  std::vector<ExampleId> ids = {twisted("onedim", 0, 1, 0), twisted("jordan", 0, 1, 0),
                                twisted("jordan", mpq_class(1, 2), 2, 1), twisted("bms_family", 0, 3, 1),
                                twisted("fermion", mpq_class(1, 2), 1, 0)};
  ExampleId sl2{"simple_lie", {}};
  ids.push_back(sl2);
  sl2.params.n = 2;
  ids.push_back(sl2);
  ExampleId gal{"galilean", {}};
  gal.params.m = 3;
  ids.push_back(gal);
  for (const auto& id : ids) {
    CAPTURE(id.label());
    auto g = avsa::make_example(id);
    auto base = avsa::h2_summary(g);
    for (int t = 0; t < 2; ++t) {
      auto h = avsa::change_basis(g, random_parity_basis(g, rng));
      REQUIRE(avsa::validate_structure(h).empty());
      REQUIRE(avsa::validate_derivation(h).empty());
      REQUIRE(avsa::validate_automorphism(h).empty());
      CHECK(avsa::h2_summary(h) == base);
    }
  }
}
