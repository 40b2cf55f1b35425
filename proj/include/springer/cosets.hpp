#pragma once

// Cosets of the weight lattice P modulo the root lattice Q and their
// distinguished representatives.

#include "springer/rootsys.hpp"

#include <optional>
#include <vector>

namespace springer {

struct CosetRecord {
  std::size_t coset_id = 0;
  /// Representative with every coordinate in [0,1).
  WeightVec lambda_R;
  /// Minimal dominant weight of the coset.
  WeightVec lambda_dom;
  /// xi - lambda_R, the representative with coordinates in (0,1].
  WeightVec lambda_C;
  /// apply_word(witness, lambda_dom) == lambda_R.
  ReflectionWord witness;
};

struct CosetTable {
  RootSystemId root_system;
  /// Ordered lexicographically by lambda_R; the identity coset comes first.
  std::vector<CosetRecord> records;

  const CosetRecord& record_of(const WeightVec& lambda_R) const;
  /// Index of the record whose coset contains mu (mu must lie in P).
  std::size_t coset_of(const WeightVec& mu) const;
};

/// Componentwise fractional part: the unique representative of mu + Q with
/// coordinates in [0,1). Throws InputError if mu is not in P.
WeightVec lambda_R_of(const RootSystem& rs, const WeightVec& mu);

/// One record per element of P/Q. Throws InvariantViolation if any record
/// fails its invariants (conjugacy, minimality, replay).
CosetTable enumerate_cosets(const RootSystem& rs);

/// Word sending lambda_dom to lambda_R, from the inverted greedy reduction of
/// lambda_R. Replayed exactly before returning.
ReflectionWord conjugacy_witness(const RootSystem& rs, const CosetRecord& rec);

/// Returns a dominant weight lambda_dom - c (c a nonzero nonnegative integer
/// combination of simple roots) if one exists, i.e. a counterexample to
/// minimality. Coefficients are bounded by those of lambda_dom, which bounds
/// the total by its height.
std::optional<WeightVec> find_smaller_dominant(const RootSystem& rs, const WeightVec& lambda_dom);

} // namespace springer
