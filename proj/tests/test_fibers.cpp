#include "springer/fibers.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace springer;

namespace {

FaceSpec face(std::vector<int> j, std::size_t rank) { return FaceSpec::make(std::move(j), rank); }

std::string z_string(Family f, int r, std::vector<int> j, const char* method) {
  RootSystem rs(RootSystemId{f, r});
  FaceSpec fs = face(std::move(j), rs.rank());
  if (std::string(method) == "table") return z_group_table(rs, fs).to_string();
  return z_group_lattice(rs, fs).to_string();
}

// Elements of P/Q as weights with coordinates in [0,1), by scanning
// numerators over |det A|; independent of the coset enumeration.
std::vector<WeightVec> center_elements(const RootSystem& rs) {
  const long den = Integer(abs(oracle::cofactor_det(rs.cartan()))).get_si();
  const std::size_t n = rs.rank();
  std::vector<WeightVec> out;
  std::vector<long> k(n, 0);
  while (true) {
    WeightVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = Rational(k[i], den);
      w[i].canonicalize();
    }
    if (rs.in_weight_lattice(w)) out.push_back(w);
    std::size_t i = 0;
    while (i < n && k[i] == den - 1) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return out;
}

FiniteAbelianGroup brute_force_z(const RootSystem& rs, const std::vector<WeightVec>& elements, const FaceSpec& fs) {
  std::vector<long> orders;
  for (const auto& w : elements) {
    bool vanishes = true;
    for (int j : fs.J) vanishes = vanishes && w[static_cast<std::size_t>(j - 1)] == 0;
    if (!vanishes) continue;
    long k = 1;
    while (!(Rational(k) * w).is_integral()) ++k;
    orders.push_back(k);
  }
  return FiniteAbelianGroup::from_cyclic_orders(oracle::invariant_factors_from_orders(orders));
}

} // namespace

TEST_CASE("sl4 with J = {2} gives Z/2 three ways") {
  RootSystem rs(RootSystemId{Family::A, 3});
  FiberReport r = fiber_report(rs, face({2}, 3));
  CHECK(r.group_lattice.to_string() == "Z/2");
  CHECK(r.group_cosets.to_string() == "Z/2");
  CHECK(r.group_table.to_string() == "Z/2");
  CHECK(r.agree);
  CHECK_FALSE(r.orbit_map_isomorphism);
}

TEST_CASE("closed-form table rows") {
  CHECK(z_string(Family::A, 5, {2, 4}, "table") == "Z/2");
  CHECK(z_string(Family::A, 5, {3}, "table") == "Z/3");
  CHECK(z_string(Family::A, 5, {1}, "table") == "1");
  CHECK(z_string(Family::B, 4, {2, 4}, "table") == "Z/2");
  CHECK(z_string(Family::B, 4, {1, 2}, "table") == "1");
  CHECK(z_string(Family::C, 4, {1, 2, 3}, "table") == "Z/2");
  CHECK(z_string(Family::C, 4, {4}, "table") == "1");
  CHECK(z_string(Family::D, 6, {2}, "table") == "Z/2 x Z/2");
  CHECK(z_string(Family::D, 5, {2}, "table") == "Z/4");
  CHECK(z_string(Family::D, 5, {1}, "table") == "Z/2");
  CHECK(z_string(Family::D, 6, {2, 5}, "table") == "Z/2");
  CHECK(z_string(Family::D, 6, {1, 5}, "table") == "1");
  CHECK(z_string(Family::D, 6, {5, 6}, "table") == "1");
  CHECK(z_string(Family::D, 5, {4}, "table") == "1");
  CHECK(z_string(Family::E, 6, {2, 4}, "table") == "Z/3");
  CHECK(z_string(Family::E, 6, {3}, "table") == "1");
  CHECK(z_string(Family::E, 7, {1, 3, 4, 6}, "table") == "Z/2");
  CHECK(z_string(Family::E, 7, {5}, "table") == "1");
  CHECK(z_string(Family::F, 4, {1}, "table") == "1");
  CHECK(z_string(Family::A, 3, {}, "table") == "Z/4");
}

TEST_CASE("property: lattice method matches brute-force element orders") {
  for (const auto& id : oracle::all_types(6)) {
    if (id.family == Family::E && id.rank == 8) continue;
    CAPTURE(id.to_string());
    RootSystem rs(id);
    auto elements = center_elements(rs);
    for (const auto& fs : all_faces(rs.rank())) {
      CAPTURE(fs.to_string());
      CHECK(z_group_lattice(rs, fs) == brute_force_z(rs, elements, fs));
    }
  }
}

TEST_CASE("empty and full faces") {
  for (const auto& id : oracle::all_types(6)) {
    RootSystem rs(id);
    CHECK(z_group_lattice(rs, FaceSpec{}) == center_dual(rs));
    CHECK(center_dual(rs).order() == oracle::index_table(id));
    std::vector<int> all;
    for (int j = 1; j <= id.rank; ++j) all.push_back(j);
    CHECK(z_group_lattice(rs, face(all, rs.rank())).is_trivial());
  }
}

TEST_CASE("property: larger faces give subgroups") {
  for (auto id : {RootSystemId{Family::A, 5}, RootSystemId{Family::D, 6}, RootSystemId{Family::E, 6}}) {
    RootSystem rs(id);
    auto faces = all_faces(rs.rank());
    std::map<std::vector<int>, Integer> order;
    for (const auto& fs : faces) order[fs.J] = z_group_lattice(rs, fs).order();
    for (const auto& a : faces)
      for (const auto& b : faces)
        if (std::includes(b.J.begin(), b.J.end(), a.J.begin(), a.J.end()))
          CHECK(order[a.J] % order[b.J] == 0);
  }
}

TEST_CASE("D4 triality symmetry and the closed-form discrepancy") {
  RootSystem rs(RootSystemId{Family::D, 4});
  // Triality permutes 1, 3, 4 and fixes 2, so the three groups must agree.
  for (std::vector<int> j : {std::vector<int>{1}, {3}, {4}})
    CHECK(z_group_lattice(rs, face(j, 4)).to_string() == "Z/2");
  for (std::vector<int> j : {std::vector<int>{1, 2}, {2, 3}, {2, 4}})
    CHECK(z_group_lattice(rs, face(j, 4)).to_string() == "Z/2");

  CHECK(z_group_table(rs, face({1}, 4)).to_string() == "Z/2");
  FiberReport r = fiber_report(rs, face({3}, 4));
  CHECK(r.group_lattice.to_string() == "Z/2");
  CHECK(r.group_cosets.to_string() == "Z/2");
  CHECK(r.group_table.to_string() == "1");
  CHECK_FALSE(r.agree);
}

TEST_CASE("coset method rejects a table from another type") {
  RootSystem a3(RootSystemId{Family::A, 3});
  RootSystem b3(RootSystemId{Family::B, 3});
  CHECK_THROWS_AS(z_group_cosets(a3, enumerate_cosets(b3), FaceSpec{}), InputError);
}

TEST_CASE("sweeps") {
  using F = Family;
  auto small = sweep_fibers({{F::A, 1}, {F::A, 2}, {F::A, 3}, {F::A, 4}});
  for (const auto& s : small) {
    CHECK(s.disagreements == 0);
    CHECK(s.reports.size() == (std::size_t{1} << s.id.rank) - 1);
  }
  auto e6 = sweep_fibers({{F::E, 6}}).front();
  CHECK(e6.reports.size() == 63);
  CHECK(e6.disagreements == 0);
  auto f4 = sweep_fibers({{F::F, 4}}).front();
  for (const auto& r : f4.reports) CHECK(r.group_lattice.is_trivial());
  CHECK(f4.disagreements == 0);

  std::vector<RootSystemId> ids{{F::B, 3}, {F::C, 3}, {F::D, 4}, {F::D, 5}, {F::E, 7}};
  auto serial = sweep_fibers(ids, 1);
  auto parallel = sweep_fibers(ids, 3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == parallel[i].id);
    CHECK(serial[i].agreements == parallel[i].agreements);
    REQUIRE(serial[i].reports.size() == parallel[i].reports.size());
    for (std::size_t k = 0; k < serial[i].reports.size(); ++k)
      CHECK(serial[i].reports[k].group_lattice == parallel[i].reports[k].group_lattice);
  }
}
