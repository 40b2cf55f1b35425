#pragma once

// Fiber groups Z(J) = Z(tau_J) of V -> V_ad over the orbit attached to the face
// tau_J, computed three ways.

#include "springer/cosets.hpp"
#include "springer/intlat.hpp"
#include "springer/toric.hpp"

#include <vector>

namespace springer {

/// P/Q, the character group of the center.
FiniteAbelianGroup center_dual(const RootSystem& rs);

/// (tau_J^perp cap P) / (tau_J^perp cap Q) from saturated lattice intersections.
FiniteAbelianGroup z_group_lattice(const RootSystem& rs, const FaceSpec& face);

/// Subgroup of P/Q made of the cosets whose lambda_R vanishes on every j in J.
FiniteAbelianGroup z_group_cosets(const RootSystem& rs, const CosetTable& table, const FaceSpec& face);

/// Closed-form table for the classical families and E6, E7; trivial for E8, F4, G2.
/// The empty face gives the full center.
FiniteAbelianGroup z_group_table(const RootSystem& rs, const FaceSpec& face);

struct FiberReport {
  FaceSpec face;
  FiniteAbelianGroup group_lattice;
  FiniteAbelianGroup group_cosets;
  FiniteAbelianGroup group_table;
  /// All three invariant-factor lists are identical.
  bool agree = false;
  /// V(tau_J) -> V_ad(tau_J) is an isomorphism, i.e. Z(J) is trivial.
  bool orbit_map_isomorphism = false;
};

/// Throws InvariantViolation when the lattice and coset methods disagree; a
/// mismatch with the closed-form table is reported through `agree`.
FiberReport fiber_report(const RootSystem& rs, const CosetTable& table, const FaceSpec& face);
FiberReport fiber_report(const RootSystem& rs, const FaceSpec& face);

struct TypeSweep {
  RootSystemId id;
  std::vector<FiberReport> reports;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
};

/// Every nonempty J for every listed type. Types are processed on up to
/// `threads` workers; the result order follows `ids`.
std::vector<TypeSweep> sweep_fibers(const std::vector<RootSystemId>& ids, unsigned threads = 1);

} // namespace springer
