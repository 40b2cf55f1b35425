#pragma once

// Exact integer and rational linear algebra over lattices: Smith normal form,
// finite quotient groups, saturated lattice/subspace intersections.

#include "springer/matrix.hpp"
#include "springer/weight.hpp"

#include <span>
#include <string>
#include <vector>

namespace springer {

/// U * m * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D, in order.
  IntVector elementary_divisors() const;
  std::size_t rank() const { return elementary_divisors().size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant by fraction-free elimination; square matrices only.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// A finite abelian group in invariant-factor form Z/d1 x ... x Z/dk with
/// d1 | d2 | ... | dk and every di >= 2. The empty list is the trivial group.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  /// Accepts any list of positive cyclic orders and brings it to canonical
  /// invariant-factor form (Z/2 x Z/3 becomes Z/6, factors of 1 disappear).
  static FiniteAbelianGroup from_cyclic_orders(const IntVector& orders);

  const IntVector& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }

  /// "Z/2 x Z/2", or "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  IntVector factors_;
};

std::size_t rank(const RatMatrix& m);

/// Inverse of a square nonsingular rational matrix.
RatMatrix inverse(const RatMatrix& m);

/// Basis (as rows) of {x : x * m = 0}, the left kernel over Q.
RatMatrix left_kernel(const RatMatrix& m);

/// A basis (rows) of the lattice generated by the rows of `generators`.
RatMatrix lattice_basis(const RatMatrix& generators);

/// True when every row of `sub` is an integer combination of rows of `sup`.
bool lattice_contains(const RatMatrix& sup, const RatMatrix& sub);

/// (row lattice of sup) / (row lattice of sub). Requires sub inside sup and
/// equal ranks; otherwise throws InputError.
FiniteAbelianGroup quotient_group(const RatMatrix& sub, const RatMatrix& sup);

/// Saturated basis of {v in lattice : v in span(subspace rows)}. The lattice
/// basis must be full rank in its ambient space.
RatMatrix lattice_subspace_intersection(const RatMatrix& lattice_basis,
                                        const RatMatrix& subspace);

/// Coefficients c with sum c_i basis_i = v. Throws InputError when v is not in
/// the span or the basis is dependent.
RatVector express_in_basis(const RatVector& v, const RatMatrix& basis);
RatVector express_in_basis(const WeightVec& v, std::span<const WeightVec> basis);

RatMatrix rows_of(std::span<const WeightVec> weights, std::size_t rank);

} // namespace springer
