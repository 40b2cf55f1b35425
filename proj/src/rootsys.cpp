#include "springer/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace springer {

char family_letter(Family f) {
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::C: return 'C';
  case Family::D: return 'D';
  case Family::E: return 'E';
  case Family::F: return 'F';
  case Family::G: return 'G';
  }
  return '?';
}

RootSystemId RootSystemId::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("expected a type like A3 or E6, got '" + std::string(text) + "'");
  RootSystemId id;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
  case 'A': id.family = Family::A; break;
  case 'B': id.family = Family::B; break;
  case 'C': id.family = Family::C; break;
  case 'D': id.family = Family::D; break;
  case 'E': id.family = Family::E; break;
  case 'F': id.family = Family::F; break;
  case 'G': id.family = Family::G; break;
  default: throw InputError("unknown root system family '" + std::string(1, text[0]) + "'");
  }
  auto digits = text.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError("malformed rank in '" + std::string(text) + "'");
  id.rank = std::stoi(std::string(digits));
  id.validate();
  return id;
}

std::string RootSystemId::to_string() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

void RootSystemId::validate() const {
  bool ok = false;
  switch (family) {
  case Family::A: ok = rank >= 1; break;
  case Family::B:
  case Family::C: ok = rank >= 2; break;
  case Family::D: ok = rank >= 3; break;
  case Family::E: ok = rank >= 6 && rank <= 8; break;
  case Family::F: ok = rank == 4; break;
  case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw InputError("rank " + std::to_string(rank) + " is not admissible for type " +
                            std::string(1, family_letter(family)));
}

namespace {

// Simple roots as rows in the standard Euclidean realisation (Bourbaki/Humphreys).
RatMatrix epsilon_simple_roots(const RootSystemId& id) {
  const int n = id.rank;
  auto e = [](RatVector& v, int idx, const Rational& x) { v[static_cast<std::size_t>(idx)] += x; };
  std::vector<RatVector> rows;
  std::size_t dim = 0;
  switch (id.family) {
  case Family::A:
    dim = static_cast<std::size_t>(n + 1);
    for (int i = 0; i < n; ++i) {
      RatVector v(dim, Rational(0));
      e(v, i, 1);
      e(v, i + 1, -1);
      rows.push_back(v);
    }
    break;
  case Family::B:
  case Family::C:
  case Family::D:
    dim = static_cast<std::size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
      RatVector v(dim, Rational(0));
      e(v, i, 1);
      e(v, i + 1, -1);
      rows.push_back(v);
    }
    {
      RatVector v(dim, Rational(0));
      if (id.family == Family::B) e(v, n - 1, 1);
      if (id.family == Family::C) e(v, n - 1, 2);
      if (id.family == Family::D) {
        e(v, n - 2, 1);
        e(v, n - 1, 1);
      }
      rows.push_back(v);
    }
    break;
  case Family::E: {
    dim = 8;
    RatVector a1(dim, Rational(0));
    for (int k = 0; k < 8; ++k) a1[static_cast<std::size_t>(k)] = make_rational(k == 0 || k == 7 ? 1 : -1, 2);
    rows.push_back(a1);
    RatVector a2(dim, Rational(0));
    e(a2, 0, 1);
    e(a2, 1, 1);
    rows.push_back(a2);
    for (int i = 3; i <= n; ++i) {
      RatVector v(dim, Rational(0));
      e(v, i - 2, 1);
      e(v, i - 3, -1);
      rows.push_back(v);
    }
    break;
  }
  case Family::F: {
    dim = 4;
    RatVector v(dim, Rational(0));
    e(v, 1, 1), e(v, 2, -1), rows.push_back(v);
    v.assign(dim, Rational(0));
    e(v, 2, 1), e(v, 3, -1), rows.push_back(v);
    v.assign(dim, Rational(0));
    e(v, 3, 1), rows.push_back(v);
    v.assign(dim, make_rational(-1, 2));
    v[0] = make_rational(1, 2);
    rows.push_back(v);
    break;
  }
  case Family::G: {
    dim = 3;
    RatVector v(dim, Rational(0));
    e(v, 0, 1), e(v, 1, -1), rows.push_back(v);
    v.assign(dim, Rational(0));
    e(v, 0, -2), e(v, 1, 1), e(v, 2, 1), rows.push_back(v);
    break;
  }
  }
  return RatMatrix::from_rows(rows, dim);
}

bool is_nonnegative(const WeightVec& w) {
  return std::all_of(w.coords().begin(), w.coords().end(), [](const Rational& x) { return x >= 0; });
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

} // namespace

RootSystem::RootSystem(RootSystemId id) : id_(id) {
  id_.validate();
  const std::size_t n = rank();
  epsilon_ = epsilon_simple_roots(id_);

  pairing_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < epsilon_.cols(); ++k) s += epsilon_(i, k) * epsilon_(j, k);
      pairing_(i, j) = s;
    }

  cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 2 * pairing_(i, j) / pairing_(i, i);
      if (!is_integer(a)) throw InvariantViolation("non-integral Cartan entry for " + id_.to_string());
      cartan_(i, j) = a.get_num();
    }

  for (std::size_t i = 0; i < n; ++i) simple_roots_.push_back(WeightVec::unit(n, i));
  xi_ = WeightVec(n);
  for (std::size_t i = 0; i < n; ++i) xi_[i] = 1;

  // Close the simple roots under simple reflections that keep them positive.
  std::unordered_set<WeightVec, WeightVecHash> seen(simple_roots_.begin(), simple_roots_.end());
  std::deque<WeightVec> queue(simple_roots_.begin(), simple_roots_.end());
  while (!queue.empty()) {
    WeightVec beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      WeightVec gamma = simple_reflection(*this, i, beta);
      if (is_nonnegative(gamma) && seen.insert(gamma).second) queue.push_back(gamma);
    }
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const WeightVec& a, const WeightVec& b) {
    int c = cmp(a.height(), b.height());
    return c != 0 ? c < 0 : a < b;
  });

  RatMatrix inv = inverse(to_rational(cartan_));
  for (std::size_t k = 0; k < n; ++k) fundamental_.emplace_back(inv.col(k));

  rho_ = WeightVec(n);
  for (const auto& beta : positive_roots_) rho_ += beta;
  rho_ = make_rational(1, 2) * rho_;
}

void RootSystem::check_rank(const WeightVec& lambda) const {
  if (lambda.rank() != rank())
    throw InputError("weight has " + std::to_string(lambda.rank()) + " coordinates but " + id_.to_string() +
                     " has rank " + std::to_string(rank()));
}

Rational RootSystem::coroot_pairing(const WeightVec& lambda, int i) const {
  check_rank(lambda);
  if (i < 1 || i > static_cast<int>(rank()))
    throw InputError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
  const auto r = static_cast<std::size_t>(i - 1);
  Rational s = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    if (lambda[j] != 0) s += lambda[j] * cartan_(r, j);
  return s;
}

Rational RootSystem::inner(const WeightVec& lambda, const WeightVec& mu) const {
  check_rank(lambda);
  check_rank(mu);
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (mu[j] != 0) s += lambda[i] * pairing_(i, j) * mu[j];
  }
  return s;
}

bool RootSystem::in_root_lattice(const WeightVec& lambda) const {
  check_rank(lambda);
  return lambda.is_integral();
}

bool RootSystem::in_weight_lattice(const WeightVec& lambda) const {
  for (int i = 1; i <= static_cast<int>(rank()); ++i)
    if (!is_integer(coroot_pairing(lambda, i))) return false;
  return true;
}

bool RootSystem::is_dominant(const WeightVec& lambda) const {
  for (int i = 1; i <= static_cast<int>(rank()); ++i)
    if (coroot_pairing(lambda, i) < 0) return false;
  return true;
}

RatVector RootSystem::fundamental_coords(const WeightVec& lambda) const {
  RatVector out;
  for (int i = 1; i <= static_cast<int>(rank()); ++i) out.push_back(coroot_pairing(lambda, i));
  return out;
}

WeightVec RootSystem::from_fundamental_coords(const RatVector& coords) const {
  if (coords.size() != rank()) throw InputError("fundamental coordinate count does not match rank");
  WeightVec w(rank());
  for (std::size_t k = 0; k < rank(); ++k) w += coords[k] * fundamental_[k];
  return w;
}

RatVector RootSystem::epsilon_coords(const WeightVec& lambda) const {
  check_rank(lambda);
  return row_times(lambda.coords(), epsilon_);
}

Integer RootSystem::weyl_group_order() const {
  const int n = id_.rank;
  switch (id_.family) {
  case Family::A: return factorial(n + 1);
  case Family::B:
  case Family::C: return factorial(n) * (Integer(1) << static_cast<unsigned>(n));
  case Family::D: return factorial(n) * (Integer(1) << static_cast<unsigned>(n - 1));
  case Family::E:
    if (n == 6) return 51840;
    if (n == 7) return 2903040;
    return 696729600;
  case Family::F: return 1152;
  case Family::G: return 12;
  }
  return 0;
}

RootSystem build_root_system(const RootSystemId& id) { return RootSystem(id); }

WeightVec simple_reflection(const RootSystem& rs, int i, const WeightVec& lambda) {
  Rational c = rs.coroot_pairing(lambda, i);
  WeightVec out = lambda;
  out[static_cast<std::size_t>(i - 1)] -= c;
  return out;
}

WeightVec apply_word(const RootSystem& rs, const ReflectionWord& word, const WeightVec& lambda) {
  WeightVec w = lambda;
  for (int i : word) w = simple_reflection(rs, i, w);
  return w;
}

ReflectionWord word_from_composition(const std::vector<int>& product) {
  return ReflectionWord(product.rbegin(), product.rend());
}

DominantRepresentative dominant_representative(const RootSystem& rs, const WeightVec& lambda) {
  rs.check_rank(lambda);
  WeightVec w = lambda;
  ReflectionWord applied;
  const int n = static_cast<int>(rs.rank());
  while (true) {
    int chosen = 0;
    for (int i = 1; i <= n; ++i)
      if (rs.coroot_pairing(w, i) < 0) {
        chosen = i;
        break;
      }
    if (chosen == 0) break;
    w = simple_reflection(rs, chosen, w);
    applied.push_back(chosen);
  }
  // w = s_{ik} ... s_{i1} lambda, so lambda = s_{i1} ... s_{ik} w.
  return {std::move(w), ReflectionWord(applied.rbegin(), applied.rend())};
}

std::vector<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& lambda, std::size_t cap) {
  rs.check_rank(lambda);
  std::unordered_set<WeightVec, WeightVecHash> seen{lambda};
  std::deque<WeightVec> queue{lambda};
  const int n = static_cast<int>(rs.rank());
  while (!queue.empty()) {
    WeightVec mu = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (rs.coroot_pairing(mu, i) == 0) continue;
      WeightVec nu = simple_reflection(rs, i, mu);
      if (seen.insert(nu).second) {
        if (seen.size() > cap)
          throw InputError("Weyl orbit exceeds the configured cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(nu));
      }
    }
  }
  std::vector<WeightVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t expected_positive_root_count(const RootSystemId& id) {
  const auto n = static_cast<std::size_t>(id.rank);
  switch (id.family) {
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

} // namespace springer
