#include "springer/cosets.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace springer {

namespace {

WeightVec fractional_part(const WeightVec& mu) {
  WeightVec out(mu.rank());
  for (std::size_t i = 0; i < mu.rank(); ++i) out[i] = frac(mu[i]);
  return out;
}

} // namespace

WeightVec lambda_R_of(const RootSystem& rs, const WeightVec& mu) {
  rs.check_rank(mu);
  if (!rs.in_weight_lattice(mu)) throw InputError("weight " + mu.to_tuple_string() + " is not in the weight lattice P");
  return fractional_part(mu);
}

const CosetRecord& CosetTable::record_of(const WeightVec& lambda_R) const {
  for (const auto& rec : records)
    if (rec.lambda_R == lambda_R) return rec;
  throw InputError("no coset with lambda_R = " + lambda_R.to_tuple_string());
}

std::size_t CosetTable::coset_of(const WeightVec& mu) const {
  return record_of(fractional_part(mu)).coset_id;
}

ReflectionWord conjugacy_witness(const RootSystem& rs, const CosetRecord& rec) {
  auto dom = dominant_representative(rs, rec.lambda_R);
  if (dom.weight != rec.lambda_dom)
    throw InvariantViolation("lambda_R " + rec.lambda_R.to_tuple_string() + " reduces to " +
                             dom.weight.to_tuple_string() + ", not to lambda_dom " +
                             rec.lambda_dom.to_tuple_string());
  if (apply_word(rs, dom.word, rec.lambda_dom) != rec.lambda_R)
    throw InvariantViolation("witness word does not replay to lambda_R " + rec.lambda_R.to_tuple_string());
  return dom.word;
}

std::optional<WeightVec> find_smaller_dominant(const RootSystem& rs, const WeightVec& lambda_dom) {
  const std::size_t n = rs.rank();
  std::vector<long> limit(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer f = floor(lambda_dom[i]);
    limit[i] = f < 0 ? -1 : f.get_si();
  }
  if (std::any_of(limit.begin(), limit.end(), [](long l) { return l < 0; })) return std::nullopt;

  std::vector<long> c(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && c[k] == limit[k]) c[k++] = 0;
    if (k == n) break;
    ++c[k];
    WeightVec mu = lambda_dom;
    for (std::size_t i = 0; i < n; ++i) mu[i] -= c[i];
    if (rs.is_dominant(mu)) return mu;
  }
  return std::nullopt;
}

CosetTable enumerate_cosets(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::vector<WeightVec> generators;
  for (const auto& omega : rs.fundamental_weights()) generators.push_back(fractional_part(omega));

  std::set<WeightVec> elements{WeightVec(n)};
  std::deque<WeightVec> queue{WeightVec(n)};
  while (!queue.empty()) {
    WeightVec x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      WeightVec y = fractional_part(x + g);
      if (elements.insert(y).second) queue.push_back(y);
    }
  }
  Integer index = abs(determinant(rs.cartan()));
  if (Integer(static_cast<unsigned long>(elements.size())) != index)
    throw InvariantViolation("found " + std::to_string(elements.size()) + " cosets of Q in P but [P:Q] = " +
                             index.get_str());

  CosetTable table;
  table.root_system = rs.id();
  std::size_t id = 0;
  for (const auto& lambda_R : elements) {
    CosetRecord rec;
    rec.coset_id = id++;
    rec.lambda_R = lambda_R;
    rec.lambda_C = rs.xi() - lambda_R;
    auto dom = dominant_representative(rs, lambda_R);
    rec.lambda_dom = dom.weight;
    rec.witness = conjugacy_witness(rs, rec);
    if (auto smaller = find_smaller_dominant(rs, rec.lambda_dom))
      throw InvariantViolation("dominant weight " + smaller->to_tuple_string() + " lies below " +
                               rec.lambda_dom.to_tuple_string() + " in its coset");
    if (!(rec.lambda_dom - rec.lambda_R).is_integral())
      throw InvariantViolation("lambda_dom and lambda_R lie in different cosets");
    table.records.push_back(std::move(rec));
  }
  return table;
}

} // namespace springer
