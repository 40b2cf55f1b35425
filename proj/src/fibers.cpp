#include "springer/fibers.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace springer {

FiniteAbelianGroup center_dual(const RootSystem& rs) {
  return quotient_group(RatMatrix::identity(rs.rank()), weight_lattice_basis(rs));
}

FiniteAbelianGroup z_group_lattice(const RootSystem& rs, const FaceSpec& face) {
  RatMatrix perp = face_orthogonal(rs, face);
  RatMatrix p_part = lattice_subspace_intersection(weight_lattice_basis(rs), perp);
  RatMatrix q_part = lattice_subspace_intersection(RatMatrix::identity(rs.rank()), perp);
  return quotient_group(q_part, p_part);
}

FiniteAbelianGroup z_group_cosets(const RootSystem& rs, const CosetTable& table, const FaceSpec& face) {
  if (table.root_system != rs.id()) throw InputError("coset table belongs to a different root system");
  const std::size_t n = rs.rank();
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(WeightVec::unit(n, i).coords());
  std::size_t members = 0;
  for (const auto& rec : table.records) {
    bool vanishes = std::all_of(face.J.begin(), face.J.end(),
                                [&](int j) { return rec.lambda_R[static_cast<std::size_t>(j - 1)] == 0; });
    if (!vanishes) continue;
    ++members;
    gens.push_back(rec.lambda_R.coords());
  }
  FiniteAbelianGroup g = quotient_group(RatMatrix::identity(n), RatMatrix::from_rows(gens, n));
  if (g.order() != Integer(static_cast<unsigned long>(members)))
    throw InvariantViolation("cosets selected by J = " + face.to_string() + " do not form a subgroup of P/Q");
  return g;
}

namespace {

FiniteAbelianGroup cyclic(long order) { return FiniteAbelianGroup::from_cyclic_orders({Integer(order)}); }

} // namespace

FiniteAbelianGroup z_group_table(const RootSystem& rs, const FaceSpec& face) {
  if (face.J.empty()) return center_dual(rs);
  const int n = rs.id().rank;
  const auto& J = face.J;
  auto all_even = [&](auto pred) {
    return std::all_of(J.begin(), J.end(), [&](int j) { return !pred(j) || j % 2 == 0; });
  };
  auto any_in = [&](std::initializer_list<int> idx) {
    return std::any_of(idx.begin(), idx.end(), [&](int j) { return face.contains(j); });
  };

  switch (rs.id().family) {
  case Family::A: {
    long c = n + 1;
    for (int j : J) c = std::gcd(c, static_cast<long>(j));
    return cyclic(c);
  }
  case Family::B:
    return all_even([](int) { return true; }) ? cyclic(2) : FiniteAbelianGroup{};
  case Family::C:
    return face.contains(n) ? FiniteAbelianGroup{} : cyclic(2);
  case Family::D: {
    const bool has_nm1 = face.contains(n - 1);
    const bool has_n = face.contains(n);
    if (!has_nm1 && !has_n) return all_even([](int) { return true; }) ? center_dual(rs) : cyclic(2);
    if (has_nm1 != has_n && all_even([&](int j) { return j < n - 1; }) && n % 4 == 2 && n >= 6) return cyclic(2);
    return {};
  }
  case Family::E:
    if (n == 6) return any_in({1, 3, 5, 6}) ? FiniteAbelianGroup{} : cyclic(3);
    if (n == 7) return any_in({2, 5, 7}) ? FiniteAbelianGroup{} : cyclic(2);
    return {};
  case Family::F:
  case Family::G:
    return {};
  }
  return {};
}

FiberReport fiber_report(const RootSystem& rs, const CosetTable& table, const FaceSpec& face) {
  FiberReport r;
  r.face = face;
  r.group_lattice = z_group_lattice(rs, face);
  r.group_cosets = z_group_cosets(rs, table, face);
  r.group_table = z_group_table(rs, face);
  if (r.group_lattice != r.group_cosets)
    throw InvariantViolation(rs.id().to_string() + ", J = " + face.to_string() + ": lattice method gives " +
                             r.group_lattice.to_string() + " but coset method gives " + r.group_cosets.to_string());
  r.agree = r.group_table == r.group_lattice;
  r.orbit_map_isomorphism = r.group_lattice.is_trivial();
  return r;
}

FiberReport fiber_report(const RootSystem& rs, const FaceSpec& face) {
  return fiber_report(rs, enumerate_cosets(rs), face);
}

namespace {

TypeSweep sweep_one(const RootSystemId& id) {
  RootSystem rs(id);
  CosetTable table = enumerate_cosets(rs);
  TypeSweep out;
  out.id = id;
  for (const auto& face : all_faces(rs.rank())) {
    if (face.J.empty()) continue;
    out.reports.push_back(fiber_report(rs, table, face));
    if (out.reports.back().agree)
      ++out.agreements;
    else
      ++out.disagreements;
  }
  return out;
}

} // namespace

std::vector<TypeSweep> sweep_fibers(const std::vector<RootSystemId>& ids, unsigned threads) {
  std::vector<TypeSweep> out(ids.size());
  if (threads <= 1 || ids.size() <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = sweep_one(ids[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(ids.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        out[i] = sweep_one(ids[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, ids.size()); ++t) pool.emplace_back(worker);
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace springer
