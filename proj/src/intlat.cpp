#include "springer/intlat.hpp"

#include <algorithm>
#include <optional>

namespace springer {

IntVector SmithForm::elementary_divisors() const {
  IntVector out;
  const std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest |entry| in the lower-right block starting at (t, t); row-major
// scan order breaks ties.
std::optional<Pivot> smallest_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = v;
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    bool finished_block = false;
    while (true) {
      auto piv = smallest_pivot(a, t);
      if (!piv) {
        finished_block = true;
        break;
      }
      a.swap_rows(t, piv->row);
      u.swap_rows(t, piv->row);
      a.swap_cols(t, piv->col);
      v.swap_cols(t, piv->col);
      if (a(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }
      const Integer p = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), p);
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), p);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce p | every remaining entry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), p.get_mpz_t())) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (finished_block) break;
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational k = -a(i, c);
      a.add_row(i, r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational k = -a(i, c) / a(c, c);
      a.add_row(i, c, k);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] >= n) throw InputError("singular matrix has no inverse");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RatMatrix left_kernel(const RatMatrix& m) {
  // x m = 0  <=>  m^T x^T = 0.
  RatMatrix a = m.transpose();
  auto piv = rref(a);
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(n, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a(r, f);
    basis.push_back(std::move(x));
  }
  return RatMatrix::from_rows(basis, n);
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (!is_integer(inv(i, j))) throw InvariantViolation("transform is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

} // namespace

RatMatrix lattice_basis(const RatMatrix& generators) {
  auto [g, scale] = clear_denominators(generators);
  SmithForm snf = smith_normal_form(g);
  // Row lattice of g equals the row lattice of D * V^{-1}.
  IntMatrix vinv = unimodular_inverse(snf.V);
  auto divisors = snf.elementary_divisors();
  RatMatrix basis(divisors.size(), generators.cols());
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j)
      basis(i, j) = Rational(divisors[i] * vinv(i, j), scale);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) basis(i, j).canonicalize();
  return basis;
}

RatVector express_in_basis(const RatVector& v, const RatMatrix& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  if (v.size() != n) throw InputError("vector length does not match basis ambient dimension");
  // Solve basis^T * x = v.
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    aug(i, k) = v[i];
  }
  auto piv = rref(aug);
  std::size_t basis_rank = 0;
  for (auto c : piv) {
    if (c == k) throw InputError("vector lies outside the span of the basis");
    ++basis_rank;
  }
  if (basis_rank < k) throw InputError("basis vectors are linearly dependent");
  RatVector x(k, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, k);
  return x;
}

RatMatrix rows_of(std::span<const WeightVec> weights, std::size_t rank) {
  RatMatrix m(weights.size(), rank);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].rank() != rank) throw InputError("weight rank mismatch");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = weights[i][j];
  }
  return m;
}

RatVector express_in_basis(const WeightVec& v, std::span<const WeightVec> basis) {
  return express_in_basis(v.coords(), rows_of(basis, v.rank()));
}

bool lattice_contains(const RatMatrix& sup, const RatMatrix& sub) {
  RatMatrix basis = lattice_basis(sup);
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    RatVector coeffs;
    try {
      coeffs = express_in_basis(sub.row(i), basis);
    } catch (const InputError&) {
      return false;
    }
    for (const auto& c : coeffs)
      if (!is_integer(c)) return false;
  }
  return true;
}

FiniteAbelianGroup quotient_group(const RatMatrix& sub, const RatMatrix& sup) {
  if (sub.cols() != sup.cols()) throw InputError("lattices live in different ambient spaces");
  RatMatrix big = lattice_basis(sup);
  RatMatrix small = lattice_basis(sub);
  if (big.rows() != small.rows())
    throw InputError("quotient of lattices with different ranks (" + std::to_string(small.rows()) +
                     " vs " + std::to_string(big.rows()) + ") is infinite");
  const std::size_t r = big.rows();
  IntMatrix change(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    RatVector coeffs;
    try {
      coeffs = express_in_basis(small.row(i), big);
    } catch (const InputError&) {
      throw InputError("sublattice is not contained in the superlattice");
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_integer(coeffs[j])) throw InputError("sublattice is not contained in the superlattice");
      change(i, j) = coeffs[j].get_num();
    }
  }
  return FiniteAbelianGroup::from_cyclic_orders(smith_normal_form(change).elementary_divisors());
}

RatMatrix lattice_subspace_intersection(const RatMatrix& lattice, const RatMatrix& subspace) {
  const std::size_t n = lattice.cols();
  if (subspace.rows() > 0 && subspace.cols() != n)
    throw InputError("subspace and lattice live in different ambient spaces");
  // Columns of `normals` cut out span(subspace): v in span <=> v * normals = 0.
  RatMatrix normals;
  if (subspace.rows() == 0) {
    normals = RatMatrix::identity(n);
  } else {
    normals = left_kernel(subspace.transpose()).transpose();
  }
  if (normals.cols() == 0) return lattice_basis(lattice);

  RatMatrix constraint = lattice * normals;
  auto [c, scale] = clear_denominators(constraint);
  SmithForm snf = smith_normal_form(c);
  const std::size_t r = snf.rank();
  // x c = 0 with x integral <=> x = y U with y supported on rows >= r.
  std::vector<RatVector> rows;
  for (std::size_t i = r; i < snf.U.rows(); ++i) {
    RatVector coeff(snf.U.cols());
    for (std::size_t j = 0; j < snf.U.cols(); ++j) coeff[j] = Rational(snf.U(i, j));
    rows.push_back(row_times(coeff, lattice));
  }
  return RatMatrix::from_rows(rows, n);
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const IntVector& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] <= 0) throw InputError("cyclic orders must be positive");
    diag(i, i) = orders[i];
  }
  FiniteAbelianGroup g;
  for (const auto& d : smith_normal_form(diag).elementary_divisors())
    if (d > 1) g.factors_.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + factors_[i].get_str();
  }
  return out;
}

} // namespace springer
