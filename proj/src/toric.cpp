#include "springer/toric.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <optional>
#include <set>

namespace springer {

FaceSpec FaceSpec::make(std::vector<int> indices, std::size_t rank) {
  for (int j : indices)
    if (j < 1 || j > static_cast<int>(rank))
      throw InputError("face index " + std::to_string(j) + " out of range 1.." + std::to_string(rank));
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return FaceSpec{std::move(indices)};
}

FaceSpec FaceSpec::parse(std::string_view text, std::size_t rank) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        token.size() > 4)
      throw InputError("malformed face index '" + token + "'");
    out.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      if (token.empty()) throw InputError("empty entry in index list '" + std::string(text) + "'");
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    }
  }
  flush();
  return make(std::move(out), rank);
}

bool FaceSpec::contains(int j) const { return std::binary_search(J.begin(), J.end(), j); }

std::string FaceSpec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(J[i]);
  }
  return out + "}";
}

std::vector<FaceSpec> all_faces(std::size_t rank) {
  std::vector<FaceSpec> out;
  for (unsigned long mask = 0; mask < (1UL << rank); ++mask) {
    FaceSpec f;
    for (std::size_t j = 0; j < rank; ++j)
      if (mask & (1UL << j)) f.J.push_back(static_cast<int>(j + 1));
    out.push_back(std::move(f));
  }
  return out;
}

IntVector primitive_vector(const RatVector& v) {
  Integer scale = 1;
  for (const auto& x : v) scale = lcm(scale, x.get_den());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * scale;
    out[i] = s.get_num();
    g = gcd(g, out[i]);
  }
  if (g == 0) throw InputError("zero vector has no primitive multiple");
  for (auto& x : out) x /= g;
  return out;
}

namespace {

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatMatrix ray_matrix(const std::vector<IntVector>& rays, std::size_t ambient) {
  RatMatrix m(rays.size(), ambient);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = Rational(rays[i][j]);
  return m;
}

} // namespace

Cone::Cone(std::vector<IntVector> generators, std::size_t ambient_dim) : ambient_(ambient_dim) {
  for (auto& g : generators) {
    if (g.size() != ambient_dim) throw InputError("ray generator has the wrong dimension");
    rays_.push_back(primitive_vector(to_rational(g)));
  }
  if (rank(ray_matrix(rays_, ambient_)) != rays_.size())
    throw InputError("only simplicial cones (independent ray generators) are supported");
}

Integer Cone::multiplicity() const {
  if (rays_.empty()) return 1;
  IntMatrix m(rays_.size(), ambient_);
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = rays_[i][j];
  Integer index = 1;
  for (const auto& d : smith_normal_form(m).elementary_divisors()) index *= d;
  return index;
}

Cone Fan::cone(std::size_t k) const {
  std::vector<IntVector> gens;
  for (auto idx : maximal_cones.at(k)) gens.push_back(rays.at(idx));
  return Cone(std::move(gens), ambient_dim);
}

std::vector<Cone> Fan::all_cones() const {
  std::set<std::vector<std::size_t>> faces;
  for (const auto& mc : maximal_cones) {
    const std::size_t k = mc.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) f.push_back(mc[i]);
      faces.insert(std::move(f));
    }
  }
  std::vector<Cone> out;
  for (const auto& f : faces) {
    std::vector<IntVector> gens;
    for (auto idx : f) gens.push_back(rays[idx]);
    out.emplace_back(std::move(gens), ambient_dim);
  }
  return out;
}

bool Fan::support_contains(const RatVector& point) const {
  for (const auto& mc : maximal_cones) {
    std::vector<IntVector> gens;
    for (auto idx : mc) gens.push_back(rays[idx]);
    RatVector t;
    try {
      t = express_in_basis(point, ray_matrix(gens, ambient_dim));
    } catch (const InputError&) {
      continue;
    }
    if (std::all_of(t.begin(), t.end(), [](const Rational& x) { return x >= 0; })) return true;
  }
  return false;
}

Fan face_fan(const Cone& c) {
  Fan f;
  f.ambient_dim = c.ambient_dim();
  f.rays = c.rays();
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  f.maximal_cones.push_back(std::move(all));
  return f;
}

RatMatrix weight_lattice_basis(const RootSystem& rs) {
  return rows_of(rs.fundamental_weights(), rs.rank());
}

Cone sigma_cone_over(const RatMatrix& lattice_basis) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < lattice_basis.cols(); ++i) gens.push_back(primitive_vector(lattice_basis.col(i)));
  return Cone(std::move(gens), lattice_basis.rows());
}

Cone sigma_cone(const RootSystem& rs) { return sigma_cone_over(weight_lattice_basis(rs)); }

Cone face_cone(const RootSystem& rs, const FaceSpec& face) {
  Cone sigma = sigma_cone(rs);
  std::vector<IntVector> gens;
  for (int j : face.J) gens.push_back(sigma.rays().at(static_cast<std::size_t>(j - 1)));
  return Cone(std::move(gens), rs.rank());
}

RatMatrix face_orthogonal(const RootSystem& rs, const FaceSpec& face) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (!face.contains(static_cast<int>(i + 1))) rows.push_back(WeightVec::unit(rs.rank(), i).coords());
  return RatMatrix::from_rows(rows, rs.rank());
}

bool is_smooth(const RootSystem& rs, const Cone& c) {
  if (c.ambient_dim() != rs.rank())
    throw InputError("cone lives in dimension " + std::to_string(c.ambient_dim()) + ", expected " +
                     std::to_string(rs.rank()));
  return c.multiplicity() == 1;
}

SemigroupDecomposition semigroup_decompose(const RootSystem& rs, const WeightVec& mu) {
  rs.check_rank(mu);
  if (!rs.in_weight_lattice(mu)) throw InputError("weight " + mu.to_tuple_string() + " is not in the weight lattice P");
  for (std::size_t i = 0; i < mu.rank(); ++i)
    if (mu[i] < 0)
      throw InputError("weight " + mu.to_tuple_string() + " is outside sigma^vee: coordinate " + std::to_string(i + 1) +
                       " is negative");
  SemigroupDecomposition out;
  out.target = mu;
  out.lambda_R_part = lambda_R_of(rs, mu);
  WeightVec rest = mu - out.lambda_R_part;
  for (std::size_t i = 0; i < rest.rank(); ++i) {
    if (!is_integer(rest[i]) || rest[i] < 0)
      throw InvariantViolation("weight " + mu.to_tuple_string() + " is not lambda_R plus a nonnegative root combination");
    out.alpha_coeffs.push_back(rest[i].get_num());
  }
  return out;
}

namespace {

// Numerator vectors k in [0, limit]^n, in lexicographic order, for which
// k / den lies in P.
template <class Fn>
void for_each_scaled_weight(const RootSystem& rs, const Integer& den, long limit, Fn&& fn) {
  const std::size_t n = rs.rank();
  std::vector<long> k(n, 0);
  const IntMatrix& a = rs.cartan();
  while (true) {
    bool in_p = true;
    for (std::size_t i = 0; i < n && in_p; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * k[j];
      if (!mpz_divisible_p(s.get_mpz_t(), den.get_mpz_t())) in_p = false;
    }
    if (in_p) {
      WeightVec w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = Rational(Integer(k[j]), den), w[j].canonicalize();
      fn(w);
    }
    std::size_t p = n;
    while (p > 0 && k[p - 1] == limit) k[--p] = 0;
    if (p == 0) break;
    ++k[p - 1];
  }
}

} // namespace

std::vector<WeightVec> dual_semigroup_hilbert_basis(const RootSystem& rs, long coord_bound) {
  if (coord_bound < 1) throw InputError("coordinate bound must be at least 1");
  Integer den = abs(determinant(rs.cartan()));
  std::vector<WeightVec> points;
  for_each_scaled_weight(rs, den, coord_bound * den.get_si(), [&](const WeightVec& w) {
    if (!w.is_zero()) points.push_back(w);
  });
  std::stable_sort(points.begin(), points.end(),
                   [](const WeightVec& a, const WeightVec& b) { return a.height() < b.height(); });
  // A reducible element is a basis element plus something in the semigroup,
  // and that basis element has strictly smaller height.
  std::vector<WeightVec> basis;
  for (const auto& x : points) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const WeightVec& h) {
      for (std::size_t i = 0; i < x.rank(); ++i)
        if (x[i] < h[i]) return false;
      return true;
    });
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace {

// Nonzero points of (N cap span R) / (Z-span of R), as coefficient vectors
// t in [0,1)^k with t R integral.
std::vector<RatVector> parallelepiped_points(const std::vector<IntVector>& rays, std::size_t ambient) {
  RatMatrix r = ray_matrix(rays, ambient);
  RatMatrix saturated = lattice_subspace_intersection(RatMatrix::identity(ambient), r);
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < saturated.rows(); ++i) {
    RatVector t = express_in_basis(saturated.row(i), r);
    for (auto& x : t) x = frac(x);
    gens.push_back(std::move(t));
  }
  const RatVector zero(rays.size(), Rational(0));
  std::set<RatVector> seen{zero};
  std::deque<RatVector> queue{zero};
  while (!queue.empty()) {
    RatVector x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      RatVector y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = frac(x[i] + g[i]);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<RatVector> out;
  for (const auto& t : seen)
    if (t != zero) out.push_back(t);
  return out;
}

bool lex_less(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<IntVector> sorted_rays(const Fan& fan, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  for (auto i : idx) out.push_back(fan.rays[i]);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Fan resolve_fan(const RootSystem& rs, const Fan& start, std::size_t iteration_cap) {
  if (start.ambient_dim != rs.rank()) throw InputError("fan dimension does not match the root system rank");
  Fan fan = start;
  for (std::size_t iter = 0;; ++iter) {
    std::optional<std::size_t> worst;
    Integer worst_mult = 1;
    for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
      Integer m = fan.cone(c).multiplicity();
      if (m == 1) continue;
      if (!worst || m > worst_mult ||
          (m == worst_mult && lex_less(sorted_rays(fan, fan.maximal_cones[c]), sorted_rays(fan, fan.maximal_cones[*worst])))) {
        worst = c;
        worst_mult = m;
      }
    }
    if (!worst) return fan;
    if (iter >= iteration_cap) {
      std::string rays;
      for (const auto& r : sorted_rays(fan, fan.maximal_cones[*worst])) {
        rays += "(";
        for (std::size_t i = 0; i < r.size(); ++i) rays += (i ? "," : "") + r[i].get_str();
        rays += ")";
      }
      throw InputError("resolution exceeded " + std::to_string(iteration_cap) + " subdivisions; offending cone " + rays +
                       " of multiplicity " + worst_mult.get_str());
    }

    const auto chosen = fan.maximal_cones[*worst];
    std::vector<IntVector> gens;
    for (auto idx : chosen) gens.push_back(fan.rays[idx]);
    auto candidates = parallelepiped_points(gens, fan.ambient_dim);
    const RatVector* best = nullptr;
    Rational best_sum;
    for (const auto& t : candidates) {
      Rational s = 0;
      for (const auto& x : t) s += x;
      if (!best || s < best_sum) {  // candidates arrive in lexicographic order
        best = &t;
        best_sum = s;
      }
    }
    if (!best) throw InvariantViolation("non-smooth cone without interior parallelepiped points");

    RatVector point(fan.ambient_dim, Rational(0));
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((*best)[i] == 0) continue;
      support.push_back(chosen[i]);
      for (std::size_t j = 0; j < fan.ambient_dim; ++j) point[j] += (*best)[i] * Rational(gens[i][j]);
    }
    const std::size_t new_ray = fan.rays.size();
    fan.rays.push_back(primitive_vector(point));

    std::vector<std::vector<std::size_t>> next;
    for (const auto& mc : fan.maximal_cones) {
      bool contains_face = std::all_of(support.begin(), support.end(), [&](std::size_t r) {
        return std::find(mc.begin(), mc.end(), r) != mc.end();
      });
      if (!contains_face) {
        next.push_back(mc);
        continue;
      }
      for (auto drop : support) {
        std::vector<std::size_t> cell;
        for (auto r : mc)
          if (r != drop) cell.push_back(r);
        cell.push_back(new_ray);
        std::sort(cell.begin(), cell.end());
        next.push_back(std::move(cell));
      }
    }
    fan.maximal_cones = std::move(next);
  }
}

std::vector<CanonicalPoint> canonical_module_points(const RootSystem& rs, long bound) {
  if (bound < 1) throw InputError("height bound must be at least 1");
  CosetTable table = enumerate_cosets(rs);
  const std::size_t n = rs.rank();
  std::vector<CanonicalPoint> out;
  for (const auto& rec : table.records) {
    Rational budget = Rational(bound) - rec.lambda_C.height();
    if (budget < 0) continue;
    const long total = floor(budget).get_si();
    std::vector<long> nu(n, 0);
    // All nu in Z_{>=0}^n with sum(nu) <= total.
    while (true) {
      CanonicalPoint p;
      p.lambda_C = rec.lambda_C;
      p.mu = rec.lambda_C;
      for (std::size_t i = 0; i < n; ++i) {
        p.mu[i] += nu[i];
        p.nu_coeffs.push_back(Integer(nu[i]));
      }
      out.push_back(std::move(p));

      std::size_t k = 0;
      for (; k < n; ++k) {
        ++nu[k];
        long used = 0;
        for (auto x : nu) used += x;
        if (used <= total) break;
        nu[k] = 0;
      }
      if (k == n) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const CanonicalPoint& a, const CanonicalPoint& b) {
    int c = cmp(a.mu.height(), b.mu.height());
    return c != 0 ? c < 0 : a.mu < b.mu;
  });
  return out;
}

OrbifoldChart orbifold_chart(const RootSystem& rs, long d) {
  if (d < 1) throw InputError("d must be a positive integer");
  for (const auto& omega : rs.fundamental_weights())
    if (!(Rational(d) * omega).is_integral())
      throw InputError("P is not contained in (1/" + std::to_string(d) + ")Q: " + omega.to_tuple_string() +
                       " has a denominator not dividing d");
  RatMatrix q_d = RatMatrix::identity(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) q_d(i, i) = make_rational(1, d);
  OrbifoldChart chart;
  chart.d = d;
  chart.group = quotient_group(weight_lattice_basis(rs), q_d);
  chart.smooth = is_smooth(rs, sigma_cone_over(q_d));
  return chart;
}

} // namespace springer
