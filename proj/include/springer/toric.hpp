#pragma once

// The affine toric varieties V = Spec C[sigma^vee cap P] and
// V_ad = Spec C[sigma^vee cap Q] as cone and semigroup data.
//
// The lattice N = Hom(P, Z) is written in the basis dual to the fundamental
// weights, i.e. a vector n in N has coordinates n(omega_1), ..., n(omega_r).
// The cone sigma is spanned by the v_i dual to the simple roots; v_i need not
// lie in N, so its ray generator is the primitive multiple.

#include "springer/cosets.hpp"
#include "springer/intlat.hpp"
#include "springer/rootsys.hpp"

#include <vector>

namespace springer {

/// Subset of {1..rank}, kept sorted and duplicate free.
struct FaceSpec {
  std::vector<int> J;

  /// Throws InputError unless every index lies in 1..rank.
  static FaceSpec make(std::vector<int> indices, std::size_t rank);
  /// Parses "1,3" (empty string gives the empty set).
  static FaceSpec parse(std::string_view text, std::size_t rank);
  bool contains(int j) const;
  std::string to_string() const;

  friend bool operator==(const FaceSpec&, const FaceSpec&) = default;
};

/// Every subset of {1..rank} in binary-counter order; the empty set first.
std::vector<FaceSpec> all_faces(std::size_t rank);

class Cone {
public:
  Cone() = default;
  /// Generators are scaled to primitive integer vectors. Only simplicial
  /// (linearly independent) generators are accepted.
  Cone(std::vector<IntVector> generators, std::size_t ambient_dim);

  const std::vector<IntVector>& rays() const { return rays_; }
  std::size_t dim() const { return rays_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool simplicial() const { return true; }

  /// Index of the sublattice spanned by the rays inside N cap span(rays).
  Integer multiplicity() const;

private:
  std::vector<IntVector> rays_;
  std::size_t ambient_ = 0;
};

/// Fan of simplicial cones sharing a ray list. Cones are stored as their
/// maximal members; every face is implied.
struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> rays;
  /// Ray indices of each maximal cone, sorted.
  std::vector<std::vector<std::size_t>> maximal_cones;

  Cone cone(std::size_t k) const;
  /// Face closure: every face of every maximal cone, including {0}, each once.
  std::vector<Cone> all_cones() const;
  /// True when the point lies in some maximal cone.
  bool support_contains(const RatVector& point) const;
};

/// The fan of a cone and all its faces.
Fan face_fan(const Cone& c);

/// Primitive integer vector on the ray through v (v nonzero).
IntVector primitive_vector(const RatVector& v);

/// Rows omega_1..omega_r, a Z-basis of P in simple-root coordinates.
RatMatrix weight_lattice_basis(const RootSystem& rs);

/// sigma over the dual of an arbitrary lattice basis (rows, simple-root
/// coordinates): ray i has coordinates v_i(b_k) = basis(k, i).
Cone sigma_cone_over(const RatMatrix& lattice_basis);

Cone sigma_cone(const RootSystem& rs);
/// The face tau_J spanned by the rays of sigma indexed by J.
Cone face_cone(const RootSystem& rs, const FaceSpec& face);
/// Basis (rows, simple-root coordinates) of tau_J^perp = {a_j = 0 for j in J}.
RatMatrix face_orthogonal(const RootSystem& rs, const FaceSpec& face);

/// Primitive generators extend to a Z-basis of N.
bool is_smooth(const RootSystem& rs, const Cone& c);

struct SemigroupDecomposition {
  WeightVec target;
  WeightVec lambda_R_part;
  IntVector alpha_coeffs;
};

/// mu = lambda_R + sum alpha_coeffs[i] alpha_i for mu in sigma^vee cap P.
SemigroupDecomposition semigroup_decompose(const RootSystem& rs, const WeightVec& mu);

/// Minimal nonzero elements of sigma^vee cap P with coordinates <= bound.
/// Elements are found by scanning P at the denominator |det A|.
std::vector<WeightVec> dual_semigroup_hilbert_basis(const RootSystem& rs, long coord_bound);

inline constexpr std::size_t kDefaultResolutionCap = 10'000;

/// Smooth refinement of `start` by repeated stellar subdivision: the
/// non-smooth maximal cone of largest multiplicity is subdivided at the
/// nonzero lattice point of its fundamental parallelepiped with the smallest
/// coefficient sum (ties broken lexicographically).
Fan resolve_fan(const RootSystem& rs, const Fan& start, std::size_t iteration_cap = kDefaultResolutionCap);

struct CanonicalPoint {
  WeightVec mu;
  WeightVec lambda_C;
  IntVector nu_coeffs;
};

/// Every mu in P with all coordinates > 0 and height <= bound, with its
/// decomposition mu = lambda_C + nu, nu a nonnegative integer combination of
/// simple roots. Sorted by height, then lexicographically.
std::vector<CanonicalPoint> canonical_module_points(const RootSystem& rs, long bound);

struct OrbifoldChart {
  long d = 1;
  /// Z_d, dual to Q_d / P with Q_d = (1/d) Q.
  FiniteAbelianGroup group;
  /// The cone sigma is smooth over the dual of Q_d.
  bool smooth = false;
};

/// Throws InputError unless P is contained in (1/d) Q.
OrbifoldChart orbifold_chart(const RootSystem& rs, long d);

} // namespace springer
