#include "springer/intlat.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>

using namespace springer;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  const std::size_t k = std::min(d.rows(), d.cols());
  bool zero_seen = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (d(i, i) % prev != 0) return false;
    prev = d(i, i);
  }
  return true;
}

// gcd of all k x k minors, via cofactor expansion.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      cols.clear();
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows.push_back(r);
      pick_rows(r + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = springer::gcd(g, oracle::cofactor_det(sub));
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols.push_back(c);
      pick_cols(c + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return abs(g);
}

RatMatrix rat(const IntMatrix& m) { return to_rational(m); }

} // namespace

TEST_CASE("Smith normal form of small examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).elementary_divisors() == IntVector{2, 4});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).elementary_divisors() == IntVector{1, 6});
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank() == 0);
  SmithForm s = smith_normal_form(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(s.rank() == 2);
  CHECK(s.elementary_divisors() == IntVector{1, 3});
}

TEST_CASE("property: Smith normal form round trip on random matrices up to 8x8") {
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = dim(oracle::rng()), c = dim(oracle::rng());
    IntMatrix m = oracle::random_int_matrix(r, c, -9, 9);
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(is_diagonal_chain(s.D));
  }
}

TEST_CASE("property: elementary divisors match determinantal divisors") {
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(oracle::rng()), c = dim(oracle::rng());
    IntMatrix m = oracle::random_int_matrix(r, c, -6, 6);
    IntVector divisors = smith_normal_form(m).elementary_divisors();
    Integer prev = 1;
    for (std::size_t k = 1; k <= divisors.size(); ++k) {
      Integer dk = determinantal_divisor(m, k);
      REQUIRE(dk != 0);
      CHECK(divisors[k - 1] == dk / prev);
      prev = dk;
    }
    CHECK(determinantal_divisor(m, divisors.size() + 1 <= std::min(r, c) ? divisors.size() + 1 : 0) ==
          (divisors.size() < std::min(r, c) ? Integer(0) : Integer(1)));
  }
}

TEST_CASE("property: determinant agrees with cofactor expansion") {
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(oracle::rng());
    IntMatrix m = oracle::random_int_matrix(n, n, -7, 7);
    CHECK(determinant(m) == oracle::cofactor_det(m));
    CHECK(determinant(rat(m)) == Rational(oracle::cofactor_det(m)));
  }
}

TEST_CASE("finite abelian groups are canonical") {
  CHECK(FiniteAbelianGroup::from_cyclic_orders({2, 3}).to_string() == "Z/6");
  CHECK(FiniteAbelianGroup::from_cyclic_orders({2, 2}).to_string() == "Z/2 x Z/2");
  CHECK(FiniteAbelianGroup::from_cyclic_orders({1, 1}).to_string() == "1");
  CHECK(FiniteAbelianGroup::from_cyclic_orders({1}).is_trivial());
  CHECK(FiniteAbelianGroup::from_cyclic_orders({4, 6}).invariant_factors() == IntVector{2, 12});
  CHECK(FiniteAbelianGroup::from_cyclic_orders({4, 6}).order() == 24);
}

TEST_CASE("quotient groups of lattices") {
  CHECK(quotient_group(rat(IntMatrix{{2, 0}, {0, 2}}), RatMatrix::identity(2)).to_string() == "Z/2 x Z/2");
  CHECK(quotient_group(rat(IntMatrix{{1, 1}, {1, -1}}), RatMatrix::identity(2)).to_string() == "Z/2");
  CHECK(quotient_group(RatMatrix::identity(2), RatMatrix::identity(2)).is_trivial());
  CHECK_THROWS_AS(quotient_group(RatMatrix::identity(2), rat(IntMatrix{{2, 0}, {0, 1}})), InputError);
  CHECK_THROWS_AS(quotient_group(rat(IntMatrix{{1, 0}}), RatMatrix::identity(2)), InputError);
}

TEST_CASE("property: quotient group matches element-order oracle") {
  // Z^2 / M Z^2: enumerate coset representatives in the box [0, |det|)^2 and
  // compute element orders by repeated addition with a membership test.
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = oracle::random_int_matrix(2, 2, -5, 5);
    Integer det = abs(oracle::cofactor_det(m));
    if (det == 0 || det > 40) continue;
    RatMatrix sub = rat(m);
    RatMatrix inv = inverse(sub);
    auto in_sub = [&](long x, long y) {
      RatVector c = row_times(RatVector{Rational(x), Rational(y)}, inv);
      return is_integer(c[0]) && is_integer(c[1]);
    };
    const long d = det.get_si();
    std::vector<std::pair<long, long>> reps;
    for (long x = 0; x < d; ++x)
      for (long y = 0; y < d; ++y) {
        bool fresh = true;
        for (auto [a, b] : reps)
          if (in_sub(x - a, y - b)) fresh = false;
        if (fresh) reps.emplace_back(x, y);
      }
    REQUIRE(static_cast<long>(reps.size()) == d);
    std::vector<long> orders;
    for (auto [x, y] : reps) {
      long k = 1;
      while (!in_sub(k * x, k * y)) ++k;
      orders.push_back(k);
    }
    CHECK(quotient_group(sub, RatMatrix::identity(2)).invariant_factors() ==
          oracle::invariant_factors_from_orders(orders));
  }
}

TEST_CASE("inverse and kernels") {
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = oracle::random_int_matrix(4, 4, -5, 5);
    if (oracle::cofactor_det(m) == 0) continue;
    CHECK(rat(m) * inverse(rat(m)) == RatMatrix::identity(4));
  }
  RatMatrix m = rat(IntMatrix{{1, 2}, {2, 4}, {0, 1}});
  RatMatrix k = left_kernel(m);
  CHECK(k.rows() == 1);
  CHECK(k * m == RatMatrix(1, 2));
  CHECK(rank(m) == 2);
}

TEST_CASE("property: left kernel dimension and annihilation") {
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = dim(oracle::rng()), c = dim(oracle::rng());
    RatMatrix m = rat(oracle::random_int_matrix(r, c, -3, 3));
    RatMatrix k = left_kernel(m);
    CHECK(k.rows() == r - rank(m));
    if (k.rows() > 0) CHECK(k * m == RatMatrix(k.rows(), c));
  }
}

TEST_CASE("property: lattice basis spans the generated lattice") {
  for (int trial = 0; trial < 100; ++trial) {
    RatMatrix gens = rat(oracle::random_int_matrix(5, 3, -4, 4));
    for (std::size_t i = 0; i < gens.rows(); ++i) gens(i, 0) /= 2;
    RatMatrix basis = lattice_basis(gens);
    CHECK(basis.rows() == rank(gens));
    CHECK(lattice_contains(basis, gens));
    CHECK(lattice_contains(gens, basis));
  }
}

TEST_CASE("lattice intersected with a subspace is saturated") {
  // Z^3 cap {x + y + z = 0}: basis of rank 2 and every integral point of the
  // plane in a box lies in the result.
  RatMatrix plane = rat(IntMatrix{{1, -1, 0}, {0, 2, -2}});
  RatMatrix got = lattice_subspace_intersection(RatMatrix::identity(3), plane);
  CHECK(got.rows() == 2);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      RatMatrix pt = rat(IntMatrix{{x, y, -x - y}});
      CHECK(lattice_contains(got, pt));
    }
  for (std::size_t i = 0; i < got.rows(); ++i) CHECK(got(i, 0) + got(i, 1) + got(i, 2) == 0);

  // The zero subspace.
  CHECK(lattice_subspace_intersection(RatMatrix::identity(2), RatMatrix(0, 2)).rows() == 0);
}

TEST_CASE("expressing vectors in a basis") {
  RatMatrix basis = rat(IntMatrix{{1, 1}, {1, -1}});
  CHECK(express_in_basis(RatVector{2, 0}, basis) == RatVector{1, 1});
  CHECK_THROWS_AS(express_in_basis(RatVector{1, 0, 0}, basis), InputError);
  CHECK_THROWS_AS(express_in_basis(RatVector{1, 0}, rat(IntMatrix{{1, 1}, {2, 2}})), InputError);
}
