#include "springer/repmult.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace springer {

Integer WeightMultiplicityTable::multiplicity(const WeightVec& mu) const {
  auto it = entries.find(mu);
  return it == entries.end() ? Integer(0) : it->second;
}

Integer WeightMultiplicityTable::total() const {
  Integer sum = 0;
  for (const auto& [mu, m] : entries) sum += m;
  return sum;
}

namespace {

void check_highest_weight(const RootSystem& rs, const WeightVec& hw) {
  rs.check_rank(hw);
  if (!rs.in_weight_lattice(hw)) throw InputError("highest weight " + hw.to_tuple_string() + " is not in P");
  if (!rs.is_dominant(hw)) throw InputError("highest weight " + hw.to_tuple_string() + " is not dominant");
}

// Every dominant mu <= hw is reached from hw through dominant weights by
// subtracting one positive root at a time.
std::vector<WeightVec> dominant_weights_below(const RootSystem& rs, const WeightVec& hw,
                                              std::optional<long> height_bound) {
  const Rational top = hw.height();
  std::set<WeightVec> seen{hw};
  std::deque<WeightVec> queue{hw};
  while (!queue.empty()) {
    WeightVec mu = queue.front();
    queue.pop_front();
    for (const auto& alpha : rs.positive_roots()) {
      WeightVec nu = mu - alpha;
      if (!rs.is_dominant(nu)) continue;
      if (height_bound && top - nu.height() > *height_bound) continue;
      if (seen.insert(nu).second) queue.push_back(nu);
    }
  }
  std::vector<WeightVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const WeightVec& a, const WeightVec& b) { return a.height() > b.height(); });
  return out;
}

} // namespace

Integer weyl_dimension(const RootSystem& rs, const WeightVec& hw) {
  check_highest_weight(rs, hw);
  WeightVec shifted = hw + rs.rho();
  Rational prod = 1;
  for (const auto& alpha : rs.positive_roots()) prod *= rs.inner(shifted, alpha) / rs.inner(rs.rho(), alpha);
  if (!is_integer(prod)) throw InvariantViolation("Weyl dimension of " + hw.to_tuple_string() + " is not integral");
  return prod.get_num();
}

WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const WeightVec& hw,
                                              std::optional<long> height_bound) {
  check_highest_weight(rs, hw);
  if (height_bound && *height_bound < 0) throw InputError("height bound must be nonnegative");

  const std::vector<WeightVec> dominant = dominant_weights_below(rs, hw, height_bound);
  const WeightVec hw_rho = hw + rs.rho();
  const Rational top_norm = rs.inner(hw_rho, hw_rho);

  std::map<WeightVec, Integer> dom_mult;
  auto lookup = [&](const WeightVec& nu) -> Integer {
    auto it = dom_mult.find(dominant_representative(rs, nu).weight);
    return it == dom_mult.end() ? Integer(0) : it->second;
  };

  for (const auto& mu : dominant) {
    if (mu == hw) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational numer = 0;
    for (const auto& alpha : rs.positive_roots()) {
      for (long k = 1;; ++k) {
        WeightVec nu = mu + Rational(k) * alpha;
        Integer m = lookup(nu);
        if (m == 0) break;
        numer += Rational(m) * rs.inner(nu, alpha);
      }
    }
    WeightVec mu_rho = mu + rs.rho();
    Rational denom = top_norm - rs.inner(mu_rho, mu_rho);
    if (denom <= 0) throw InvariantViolation("nonpositive Freudenthal denominator at " + mu.to_tuple_string());
    Rational m = 2 * numer / denom;
    if (!is_integer(m) || m < 0)
      throw InvariantViolation("Freudenthal produced multiplicity " + to_string(m) + " at " + mu.to_tuple_string());
    if (m != 0) dom_mult[mu] = m.get_num();
  }

  WeightMultiplicityTable table;
  table.highest_weight = hw;
  table.height_bound = height_bound;
  const Rational top = hw.height();
  for (const auto& [mu, m] : dom_mult) {
    for (auto& w : weyl_orbit(rs, mu)) {
      if (height_bound && top - w.height() > *height_bound) continue;
      table.entries.emplace(std::move(w), m);
    }
  }
  if (!height_bound && table.total() != weyl_dimension(rs, hw))
    throw InvariantViolation("weight multiplicities of " + hw.to_tuple_string() + " sum to " +
                             table.total().get_str() + ", Weyl dimension is " + weyl_dimension(rs, hw).get_str());
  return table;
}

OrbitCoverMultiplicity orbit_cover_multiplicity(const RootSystem& rs, const CosetTable& table,
                                                const WeightMultiplicityTable& mults) {
  if (table.root_system != rs.id()) throw InputError("coset table belongs to a different root system");
  OrbitCoverMultiplicity out;
  out.highest_weight = mults.highest_weight;
  out.mult_via_lambda_R = 0;
  out.mult_via_lambda_dom = 0;
  for (const auto& rec : table.records) {
    out.mult_via_lambda_R += mults.multiplicity(rec.lambda_R);
    out.mult_via_lambda_dom += mults.multiplicity(rec.lambda_dom);
  }
  if (out.mult_via_lambda_R != out.mult_via_lambda_dom)
    throw InvariantViolation("highest weight " + mults.highest_weight.to_tuple_string() + ": lambda_R sum " +
                             out.mult_via_lambda_R.get_str() + " differs from lambda_dom sum " +
                             out.mult_via_lambda_dom.get_str());
  return out;
}

OrbitCoverMultiplicity orbit_cover_multiplicity(const RootSystem& rs, const CosetTable& table, const WeightVec& hw) {
  return orbit_cover_multiplicity(rs, table, weight_multiplicities(rs, hw));
}

NormalityResult normality_check(const RootSystem& rs, const CosetTable& table) {
  if (table.root_system != rs.id()) throw InputError("coset table belongs to a different root system");
  NormalityResult out;
  for (const auto& rec : table.records) {
    OffendingCoset off;
    off.coset_id = rec.coset_id;
    off.lambda_R = rec.lambda_R;
    off.lambda_dom = rec.lambda_dom;
    for (std::size_t i = 0; i < rec.lambda_dom.rank(); ++i)
      if (rec.lambda_dom[i] >= 1) off.large_coefficients.emplace_back(static_cast<int>(i + 1), rec.lambda_dom[i]);
    const bool differs = rec.lambda_dom != rec.lambda_R;
    if (differs != !off.large_coefficients.empty())
      throw InvariantViolation("coset " + std::to_string(rec.coset_id) +
                               ": lambda_dom differs from lambda_R without a coefficient >= 1");
    if (differs) {
      out.normal = false;
      out.offending.push_back(std::move(off));
    }
  }
  return out;
}

std::vector<WeightVec> lowest_dominant_weights(const RootSystem& rs, std::size_t count) {
  const std::size_t n = rs.rank();
  std::vector<Rational> heights;
  for (const auto& omega : rs.fundamental_weights()) heights.push_back(omega.height());
  Rational limit = *std::min_element(heights.begin(), heights.end()) * Rational(static_cast<long>(count));

  while (true) {
    std::vector<WeightVec> found;
    std::vector<long> c(n, 0);
    // Depth-first over fundamental coordinates with running height <= limit.
    auto recurse = [&](auto&& self, std::size_t i, const Rational& h) -> void {
      if (i == n) {
        RatVector coords(n);
        for (std::size_t k = 0; k < n; ++k) coords[k] = c[k];
        found.push_back(rs.from_fundamental_coords(coords));
        return;
      }
      for (c[i] = 0; h + heights[i] * c[i] <= limit; ++c[i]) self(self, i + 1, h + heights[i] * c[i]);
      c[i] = 0;
    };
    recurse(recurse, 0, Rational(0));
    if (found.size() >= count) {
      std::sort(found.begin(), found.end(), [](const WeightVec& a, const WeightVec& b) {
        int hc = cmp(a.height(), b.height());
        return hc != 0 ? hc < 0 : a < b;
      });
      found.resize(count);
      return found;
    }
    limit *= 2;
  }
}

} // namespace springer
