#include <doctest.h>

#include <algorithm>

#include "avsa/catalog.hpp"
#include "avsa/loopreal.hpp"

using avsa::AlgElement;
using avsa::ExampleId;
using avsa::FieldElem;
using avsa::Label;

namespace {

ExampleId twisted(const std::string& name, mpq_class beta, int n, int i) {
  ExampleId id{name, {}};
  id.params.beta = beta;
  id.params.n = n;
  id.params.i = i;
  return id;
}

ExampleId gap(int p) {
  ExampleId id{"gap_p", {}};
  id.params.p = p;
  return id;
}

avsa::SuperalgebraSpec zero_algebra() {
  avsa::SuperalgebraSpec g;
  g.name = "zero";
  g.structure = avsa::StructureConstants(0);
  return g;
}

std::size_t idx(const avsa::TruncatedAlgebra& t, const Label& l) {
  auto i = t.find(l);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("truncate counts") {
  auto t0 = avsa::truncate(avsa::build_extension(zero_algebra()), 3);
  CHECK(t0.count(Label::Kind::Vir) == 7);
  CHECK(t0.count(Label::Kind::Central) == 1);
  CHECK(t0.count(Label::Kind::Loop) == 0);

  auto t2 = avsa::truncate(avsa::build_extension(avsa::make_example(gap(2))), 2);
  CHECK(t2.count(Label::Kind::Vir) == 5);
  CHECK(t2.count(Label::Kind::Loop) == 4);
  for (const auto& l : t2.labels()) {
    if (l.kind == Label::Kind::Loop) CHECK(std::labs(l.k) % 2 == 1);
  }

  auto t1 = avsa::truncate(avsa::build_extension(avsa::make_example(twisted("onedim", 0, 1, 0))), 2);
  CHECK(t1.count(Label::Kind::Vir) == 5);
  CHECK(t1.count(Label::Kind::Loop) == 5);
  CHECK(t1.count(Label::Kind::Central) == 3);
}

TEST_CASE("bracket examples") {
  auto t = avsa::truncate(avsa::build_extension(zero_algebra()), 4);
  auto b1 = t.bracket(idx(t, Label::vir(1)), idx(t, Label::vir(-1)));
  REQUIRE(b1);
  CHECK(*b1 == AlgElement{{idx(t, Label::vir(0)), FieldElem(-2)}});
  auto b2 = t.bracket(idx(t, Label::vir(2)), idx(t, Label::vir(-2)));
  REQUIRE(b2);
  CHECK(*b2 == AlgElement{{idx(t, Label::vir(0)), FieldElem(-4)}, {*t.z_index(), FieldElem(mpq_class(1, 2))}});
  CHECK_FALSE(t.bracket(idx(t, Label::vir(4)), idx(t, Label::vir(1))).has_value());
  // Brackets with the center vanish.
  CHECK(t.bracket(*t.z_index(), idx(t, Label::vir(3)))->empty());
}

TEST_CASE("degree additivity and super-anticommutativity") {
  std::vector<ExampleId> ids = {twisted("onedim", 0, 1, 0), twisted("bms_family", mpq_class(-1, 2), 2, 1),
                                twisted("fermion", mpq_class(1, 2), 2, 1), twisted("jordan", 0, 1, 0), gap(3)};
  for (const auto& id : ids) {
    CAPTURE(id.label());
    auto t = avsa::truncate(avsa::build_extension(avsa::make_example(id)), 3);
    for (std::size_t u = 0; u < t.size(); ++u) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        auto uv = t.bracket(u, v);
        auto vu = t.bracket(v, u);
        REQUIRE(uv.has_value() == vu.has_value());
        if (!uv) continue;
        AlgElement sum = *uv;
        avsa::add_scaled(sum, FieldElem(avsa::super_sign(t.parity(u), t.parity(v))), *vu);
        CHECK(sum.empty());
        for (const auto& [w, c] : *uv) {
          if (t.label(w).kind == Label::Kind::Central) {
            CHECK(t.degree(u) + t.degree(v) == 0);
          } else {
            CHECK(t.degree(w) == t.degree(u) + t.degree(v));
          }
        }
      }
    }
  }
}

TEST_CASE("jacobi_check on small cases") {
  auto vir = avsa::truncate(avsa::build_extension(zero_algebra()), 5);
  auto rep = avsa::jacobi_check(vir);
  CHECK(rep.pass());
  CHECK(rep.admissible_triples > 0);

  auto hv = avsa::truncate(avsa::build_extension(avsa::make_example(twisted("onedim", 0, 1, 0))), 5);
  CHECK(avsa::jacobi_check(hv).pass());

  avsa::BracketTable table(hv);
  const std::size_t l2 = idx(hv, Label::vir(2)), lm2 = idx(hv, Label::vir(-2)), l0 = idx(hv, Label::vir(0));
  const std::size_t z = *hv.z_index();
  AlgElement up = *table.at(l2, lm2), down = *table.at(lm2, l2);
  up[z] = FieldElem(1);
  down[z] = FieldElem(-1);
  table.set(l2, lm2, up);
  table.set(lm2, l2, down);
  auto bad = avsa::jacobi_check(hv, table);
  REQUIRE_FALSE(bad.pass());
  // Triples through l_0 cannot see a changed central coefficient (l_0 acts by
  // degree), so the witnesses are the neighbouring triples such as (l_-1, l_-2, l_3).
  for (const auto& w : bad.witnesses) {
    std::vector<std::size_t> tr = {w.u, w.v, w.w};
    CHECK(std::count(tr.begin(), tr.end(), l0) == 0);
    CHECK((std::count(tr.begin(), tr.end(), l2) + std::count(tr.begin(), tr.end(), lm2)) > 0);
    CHECK(hv.degree(w.u) + hv.degree(w.v) + hv.degree(w.w) == 0);
    REQUIRE(w.defect.size() == 1);
    CHECK(w.defect.begin()->first == z);
  }
  bool found = false;
  for (const auto& w : bad.witnesses) {
    found = found || (w.u == idx(hv, Label::vir(-1)) && w.v == lm2 && w.w == idx(hv, Label::vir(3)));
  }
  CHECK(found);
}

TEST_CASE("pi_eval examples") {
  auto g = avsa::make_example(twisted("onedim", -1, 1, 0));
  auto t = avsa::truncate_centerless(g, 4);
  avsa::PiDatum f{-1, {FieldElem(3)}, {}};
  CHECK(avsa::pi_eval(t, f, idx(t, Label::vir(2)), idx(t, Label::loop(0, -2))) == FieldElem(3));
  CHECK(avsa::pi_eval(t, f, idx(t, Label::loop(0, -2)), idx(t, Label::vir(2))) == FieldElem(-3));

  auto gh = avsa::make_example(twisted("onedim", 0, 2, 1));
  auto th = avsa::truncate_centerless(gh, 4);
  avsa::PiDatum fh{-1, {FieldElem(1)}, {}};
  CHECK(avsa::pi_eval(th, fh, idx(th, Label::loop(0, 1)), idx(th, Label::loop(0, -1))).is_zero());

  avsa::Matrix b(2, 2);
  b(1, 0) = 5;
  b(0, 1) = 5;
  avsa::PiDatum pb{0, {}, b};
  CHECK(avsa::pi_eval(t, pb, idx(t, Label::vir(1)), idx(t, Label::loop(0, -1))).is_zero());
  CHECK(avsa::pi_eval(t, pb, idx(t, Label::vir(2)), idx(t, Label::loop(0, -2))) == FieldElem(10));
}

TEST_CASE("pi images are cocycles on the window") {
  std::vector<ExampleId> ids = {twisted("onedim", 0, 1, 0),  twisted("onedim", -1, 1, 0),
                                twisted("onedim", 0, 2, 1),  twisted("fermion", mpq_class(1, 2), 2, 1),
                                twisted("fermion", -1, 1, 0), twisted("bms_family", mpq_class(-1, 2), 2, 1),
                                twisted("bms_family", 0, 3, 1), twisted("jordan", 0, 1, 0), gap(3)};
  ExampleId sl2{"simple_lie", {}};
  ids.push_back(sl2);
  for (const auto& id : ids) {
    CAPTURE(id.label());
    auto e = avsa::build_extension(avsa::make_example(id));
    auto t = avsa::truncate_centerless(e.spec, 4);
    std::vector<avsa::PiDatum> data;
    for (int s = 0; s < 2; ++s) {
      for (const auto& f : e.rho[s].vectors) data.push_back({-1, f, {}});
      for (const auto& b : e.forms[s].vectors) data.push_back({0, {}, b});
      for (const auto& a : e.cocycles[s].vectors) data.push_back({1, {}, a});
    }
    data.push_back({0, {}, e.forms[0].distinguished});
    CHECK(data.size() == e.dims.total());
    for (const auto& d : data) {
      auto fail = avsa::first_cocycle_failure(t, [&](std::size_t u, std::size_t v) { return avsa::pi_eval(t, d, u, v); });
      CHECK_FALSE(fail.has_value());
    }
  }
}

TEST_CASE("oracle examples") {
  auto r1 = avsa::oracle_h2(avsa::make_example(twisted("onedim", 0, 1, 0)), 6, 3);
  CHECK(r1.projected_dim == 3);
  CHECK(avsa::oracle_h2(zero_algebra(), 6, 3).projected_dim == 1);
  CHECK(avsa::oracle_h2(avsa::make_example(gap(2)), 6, 3).projected_dim == 2);
  CHECK_THROWS_AS(avsa::oracle_h2(zero_algebra(), 4, 3), std::invalid_argument);
}

TEST_CASE("oracle stabilizes and agrees on the grid sample") {
  std::vector<ExampleId> ids = {twisted("onedim", -1, 1, 0), twisted("onedim", 0, 2, 1),
                                twisted("onedim", 2, 3, 1),  twisted("fermion", mpq_class(1, 2), 2, 1),
                                twisted("fermion", 0, 1, 0),  twisted("bms_family", 0, 3, 2),
                                twisted("jordan", mpq_class(1, 2), 1, 0)};
  for (const auto& id : ids) {
    CAPTURE(id.label());
    auto g = avsa::make_example(id);
    auto a = avsa::oracle_h2(g, 6, 3);
    auto b = avsa::oracle_h2(g, 8, 3);
    CHECK(a.projected_dim == b.projected_dim);
    CHECK(b.projected_dim == avsa::h2_summary(g).total());
  }
}
