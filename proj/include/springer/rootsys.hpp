#pragma once

// Root systems of the simple types, their Weyl group actions and dominance.
//
// Weights are stored in the simple-root basis. Simple roots are numbered as in
// Humphreys (1-based in every public interface: reflection words, index
// arguments). The Cartan matrix convention is A[i][j] = <alpha_j, alpha_i^vee>,
// so <lambda, alpha_i^vee> = (A a)_i for lambda = sum a_j alpha_j.

#include "springer/intlat.hpp"
#include "springer/matrix.hpp"
#include "springer/weight.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace springer {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A3", "e6", "D4". Throws InputError on unsupported input.
  static RootSystemId parse(std::string_view text);
  std::string to_string() const;
  /// Throws InputError when the rank is not admissible for the family.
  void validate() const;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;
};

char family_letter(Family f);

/// Immutable root datum of a simple Lie algebra.
class RootSystem {
public:
  explicit RootSystem(RootSystemId id);

  const RootSystemId& id() const { return id_; }
  std::size_t rank() const { return static_cast<std::size_t>(id_.rank); }

  /// Cartan matrix, A[i][j] = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  /// Symmetric invariant form on the simple roots (Gram matrix of the
  /// standard Euclidean realisation).
  const RatMatrix& pairing() const { return pairing_; }
  const std::vector<WeightVec>& simple_roots() const { return simple_roots_; }
  /// Sorted by height, then lexicographically.
  const std::vector<WeightVec>& positive_roots() const { return positive_roots_; }
  /// Fundamental weights omega_1..omega_n in the simple-root basis; a Z-basis of P.
  const std::vector<WeightVec>& fundamental_weights() const { return fundamental_; }
  /// Sum of the simple roots.
  const WeightVec& xi() const { return xi_; }
  /// Half the sum of the positive roots.
  const WeightVec& rho() const { return rho_; }
  /// Rows: simple roots in the standard epsilon coordinates.
  const RatMatrix& epsilon_realisation() const { return epsilon_; }

  /// <lambda, alpha_i^vee> for a 1-based index i.
  Rational coroot_pairing(const WeightVec& lambda, int i) const;
  /// (lambda, mu) under the invariant form.
  Rational inner(const WeightVec& lambda, const WeightVec& mu) const;

  bool in_root_lattice(const WeightVec& lambda) const;
  bool in_weight_lattice(const WeightVec& lambda) const;
  bool is_dominant(const WeightVec& lambda) const;

  /// Coordinates <lambda, alpha_i^vee> in the fundamental-weight basis.
  RatVector fundamental_coords(const WeightVec& lambda) const;
  WeightVec from_fundamental_coords(const RatVector& coords) const;
  RatVector epsilon_coords(const WeightVec& lambda) const;

  /// Order of the Weyl group.
  Integer weyl_group_order() const;

  /// Throws InputError unless lambda has this system's rank.
  void check_rank(const WeightVec& lambda) const;

private:
  RootSystemId id_;
  IntMatrix cartan_;
  RatMatrix pairing_;
  RatMatrix epsilon_;
  std::vector<WeightVec> simple_roots_;
  std::vector<WeightVec> positive_roots_;
  std::vector<WeightVec> fundamental_;
  WeightVec xi_;
  WeightVec rho_;
};

RootSystem build_root_system(const RootSystemId& id);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, i 1-based.
WeightVec simple_reflection(const RootSystem& rs, int i, const WeightVec& lambda);

/// A word [i1, i2, ..., ik] acts by applying s_{i1} first, then s_{i2}, and so on.
using ReflectionWord = std::vector<int>;

WeightVec apply_word(const RootSystem& rs, const ReflectionWord& word, const WeightVec& lambda);

/// Converts a product s_{j1} s_{j2} ... s_{jk} written as a composition
/// (rightmost acts first) into the left-to-right application order.
ReflectionWord word_from_composition(const std::vector<int>& product);

struct DominantRepresentative {
  WeightVec weight;
  /// apply_word(word, weight) recovers the input weight.
  ReflectionWord word;
};

/// Greedy reduction: repeatedly reflect in the smallest index i with
/// <lambda, alpha_i^vee> < 0.
DominantRepresentative dominant_representative(const RootSystem& rs, const WeightVec& lambda);

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/// W-orbit of lambda, sorted lexicographically. Throws InputError naming the
/// cap when the orbit would exceed it.
std::vector<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& lambda,
                                  std::size_t cap = kDefaultOrbitCap);

/// Classical count of positive roots, independent of the construction.
std::size_t expected_positive_root_count(const RootSystemId& id);

} // namespace springer
