#pragma once

#include "springer/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace springer {

/// A weight written in the simple-root basis: sum of coords[i] * alpha_{i+1}.
class WeightVec {
public:
  WeightVec() = default;
  explicit WeightVec(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit WeightVec(RatVector coords) : coords_(std::move(coords)) {}

  static WeightVec unit(std::size_t rank, std::size_t index) {
    WeightVec w(rank);
    w.coords_.at(index) = 1;
    return w;
  }

  std::size_t rank() const { return coords_.size(); }
  const RatVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  /// All coordinates integral, i.e. the weight lies in the root lattice.
  bool is_integral() const;
  /// Sum of the coordinates.
  Rational height() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator-(WeightVec a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }
  friend WeightVec operator*(const Rational& k, WeightVec a) {
    for (auto& x : a.coords_) x *= k;
    return a;
  }

  friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const WeightVec& a, const WeightVec& b);

  /// Renders "1/2 α1 + 0 α2 + 1/2 α3".
  std::string to_string() const;
  /// Renders "(1/2, 0, 1/2)".
  std::string to_tuple_string() const;

private:
  RatVector coords_;
};

struct WeightVecHash {
  std::size_t operator()(const WeightVec& w) const noexcept;
};

} // namespace springer
