#pragma once

// Weight multiplicities of irreducible representations, the two multiplicity
// sums over coset representatives, and the normality test on dominant
// coset representatives.

#include "springer/cosets.hpp"
#include "springer/rootsys.hpp"

#include <map>
#include <optional>
#include <vector>

namespace springer {

struct WeightMultiplicityTable {
  WeightVec highest_weight;
  std::map<WeightVec, Integer> entries;
  /// Depth limit ht(hw) - ht(mu) applied when the table was built, if any.
  std::optional<long> height_bound;

  /// Zero for weights outside the table.
  Integer multiplicity(const WeightVec& mu) const;
  /// Sum of all multiplicities.
  Integer total() const;
};

/// Product over positive roots of (lambda + rho, alpha) / (rho, alpha).
Integer weyl_dimension(const RootSystem& rs, const WeightVec& hw);

/// Freudenthal recursion on the dominant weights below hw, processed in
/// decreasing height, then spread over Weyl orbits. With a height bound only
/// weights mu with ht(hw) - ht(mu) <= bound are produced.
/// Throws InputError unless hw is dominant and in P.
WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const WeightVec& hw,
                                              std::optional<long> height_bound = std::nullopt);

struct OrbitCoverMultiplicity {
  WeightVec highest_weight;
  Integer mult_via_lambda_R;
  Integer mult_via_lambda_dom;
};

/// Sums m_hw(lambda_R) and m_hw(lambda_dom) over all cosets, the identity coset
/// included. Throws InvariantViolation if the two sums differ.
OrbitCoverMultiplicity orbit_cover_multiplicity(const RootSystem& rs, const CosetTable& table,
                                                const WeightMultiplicityTable& mults);
OrbitCoverMultiplicity orbit_cover_multiplicity(const RootSystem& rs, const CosetTable& table, const WeightVec& hw);

struct OffendingCoset {
  std::size_t coset_id = 0;
  WeightVec lambda_R;
  WeightVec lambda_dom;
  /// (1-based index, coefficient) for each coefficient of lambda_dom that is >= 1.
  std::vector<std::pair<int, Rational>> large_coefficients;
};

struct NormalityResult {
  bool normal = true;
  std::vector<OffendingCoset> offending;
};

/// Normal exactly when every lambda_dom has all simple-root coefficients < 1,
/// i.e. lambda_dom = lambda_R for every coset.
NormalityResult normality_check(const RootSystem& rs, const CosetTable& table);

/// The `count` dominant weights of P of smallest height, ties broken
/// lexicographically; 0 comes first.
std::vector<WeightVec> lowest_dominant_weights(const RootSystem& rs, std::size_t count);

} // namespace springer
