#include "springer/cosets.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace springer;

namespace {

// Dominant weights of the coset of lambda with height at most that of lambda,
// found by scanning fundamental-weight coordinates.
std::vector<WeightVec> dominant_in_coset_up_to(const RootSystem& rs, const WeightVec& lambda) {
  const std::size_t n = rs.rank();
  std::vector<WeightVec> out;
  std::vector<long> c(n, 0);
  const Rational limit = lambda.height();
  auto recurse = [&](auto&& self, std::size_t i, WeightVec acc) -> void {
    if (acc.height() > limit) return;
    if (i == n) {
      if ((acc - lambda).is_integral()) out.push_back(acc);
      return;
    }
    for (long k = 0;; ++k) {
      WeightVec next = acc + Rational(k) * rs.fundamental_weights()[i];
      if (next.height() > limit) break;
      self(self, i + 1, next);
    }
  };
  recurse(recurse, 0, WeightVec(n));
  return out;
}

bool minuscule_or_zero(const RootSystem& rs, const WeightVec& lambda) {
  for (const auto& a : rs.positive_roots()) {
    Rational p = 2 * rs.inner(lambda, a) / rs.inner(a, a);
    if (p != 0 && p != 1) return false;
  }
  return true;
}

} // namespace

TEST_CASE("sl4 coset representatives") {
  RootSystem rs(RootSystemId{Family::A, 3});
  CosetTable t = enumerate_cosets(rs);
  REQUIRE(t.records.size() == 4);
  const auto& w = rs.fundamental_weights();
  CHECK(w[0] == Rational(1, 4) * WeightVec(RatVector{3, 2, 1}));
  CHECK(w[1] == Rational(1, 2) * WeightVec(RatVector{1, 2, 1}));
  CHECK(w[2] == Rational(1, 4) * WeightVec(RatVector{1, 2, 3}));
  CHECK(lambda_R_of(rs, w[0]) == w[0]);
  CHECK(lambda_R_of(rs, w[1]) == Rational(1, 2) * WeightVec(RatVector{1, 0, 1}));
  CHECK(lambda_R_of(rs, w[2]) == w[2]);
  CHECK(lambda_R_of(rs, w[1]).to_string() == "1/2 α1 + 0 α2 + 1/2 α3");
  const CosetRecord& rec = t.record_of(lambda_R_of(rs, w[1]));
  CHECK(rec.lambda_dom == w[1]);
  CHECK(rec.lambda_C == Rational(1, 2) * WeightVec(RatVector{1, 2, 1}));
}

TEST_CASE("A1 cosets") {
  RootSystem rs(RootSystemId{Family::A, 1});
  CosetTable t = enumerate_cosets(rs);
  REQUIRE(t.records.size() == 2);
  CHECK(t.records[0].lambda_R.is_zero());
  CHECK(t.records[1].lambda_R == WeightVec(RatVector{Rational(1, 2)}));
  CHECK(t.records[1].lambda_C == WeightVec(RatVector{Rational(1, 2)}));
  CHECK(t.records[0].lambda_C == WeightVec(RatVector{1}));
}

TEST_CASE("E6 nontrivial coset matches the conjugacy computation") {
  RootSystem rs(RootSystemId{Family::E, 6});
  CosetTable t = enumerate_cosets(rs);
  REQUIRE(t.records.size() == 3);
  WeightVec lambda_r = Rational(1, 3) * WeightVec(RatVector{1, 0, 2, 0, 1, 2});
  const CosetRecord& rec = t.record_of(lambda_r);
  CHECK(rec.lambda_dom == rs.fundamental_weights()[0]);
  CHECK(apply_word(rs, rec.witness, rec.lambda_dom) == lambda_r);
}

TEST_CASE("trivial-center types have a single coset") {
  for (auto id : {RootSystemId{Family::G, 2}, RootSystemId{Family::F, 4}, RootSystemId{Family::E, 8}}) {
    RootSystem rs(id);
    CosetTable t = enumerate_cosets(rs);
    REQUIRE(t.records.size() == 1);
    CHECK(t.records[0].lambda_R.is_zero());
    CHECK(t.records[0].lambda_dom.is_zero());
    CHECK(t.records[0].lambda_C == rs.xi());
  }
}

TEST_CASE("property: coset table invariants for every type") {
  for (const auto& id : oracle::all_types(7)) {
    CAPTURE(id.to_string());
    RootSystem rs(id);
    CosetTable t = enumerate_cosets(rs);
    CHECK(static_cast<long>(t.records.size()) == oracle::index_table(id));
    std::set<WeightVec> reps;
    for (const auto& rec : t.records) {
      reps.insert(rec.lambda_R);
      for (const auto& x : rec.lambda_R.coords()) CHECK((x >= 0 && x < 1));
      for (const auto& x : rec.lambda_C.coords()) CHECK((x > 0 && x <= 1));
      CHECK(rec.lambda_C + rec.lambda_R == rs.xi());
      CHECK(rs.in_weight_lattice(rec.lambda_R));
      CHECK(rs.is_dominant(rec.lambda_dom));
      CHECK((rec.lambda_dom - rec.lambda_R).is_integral());
      CHECK(apply_word(rs, rec.witness, rec.lambda_dom) == rec.lambda_R);
      CHECK(minuscule_or_zero(rs, rec.lambda_dom));
      CHECK(t.coset_of(rec.lambda_dom) == rec.coset_id);
    }
    CHECK(reps.size() == t.records.size());
    CHECK(t.records.front().lambda_R.is_zero());
  }
}

TEST_CASE("property: lambda_dom is the unique lowest dominant weight of its coset") {
  for (const auto& id : oracle::all_types(5)) {
    if (id.rank > 5) continue;
    CAPTURE(id.to_string());
    RootSystem rs(id);
    for (const auto& rec : enumerate_cosets(rs).records) {
      auto found = dominant_in_coset_up_to(rs, rec.lambda_dom);
      REQUIRE(found.size() == 1);
      CHECK(found.front() == rec.lambda_dom);
      CHECK_FALSE(find_smaller_dominant(rs, rec.lambda_dom).has_value());
    }
  }
}

TEST_CASE("find_smaller_dominant finds non-minimal weights") {
  RootSystem rs(RootSystemId{Family::A, 2});
  WeightVec theta(RatVector{1, 1});
  auto smaller = find_smaller_dominant(rs, theta);
  REQUIRE(smaller.has_value());
  CHECK(smaller->is_zero());
}

TEST_CASE("coset lookups reject weights outside P") {
  RootSystem rs(RootSystemId{Family::A, 1});
  CHECK_THROWS_AS(lambda_R_of(rs, WeightVec(RatVector{Rational(1, 3)})), InputError);
  CHECK(lambda_R_of(rs, WeightVec(RatVector{Rational(-1, 2)})) == WeightVec(RatVector{Rational(1, 2)}));
  CosetTable t = enumerate_cosets(rs);
  CHECK_THROWS_AS(t.record_of(WeightVec(RatVector{Rational(1, 3)})), InputError);
  CHECK(t.coset_of(WeightVec(RatVector{Rational(7, 2)})) == 1);
}
