#include "springer/matrix.hpp"
#include "springer/weight.hpp"

namespace springer {

bool WeightVec::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

bool WeightVec::is_integral() const {
  for (const auto& x : coords_)
    if (!springer::is_integer(x)) return false;
  return true;
}

Rational WeightVec::height() const {
  Rational h = 0;
  for (const auto& x : coords_) h += x;
  return h;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.rank() != rank()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (o.rank() != rank()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::strong_ordering operator<=>(const WeightVec& a, const WeightVec& b) {
  const std::size_t n = std::min(a.rank(), b.rank());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.rank() <=> b.rank();
}

std::string WeightVec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += " + ";
    out += springer::to_string(coords_[i]) + " α" + std::to_string(i + 1);
  }
  return out;
}

std::string WeightVec::to_tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += springer::to_string(coords_[i]);
  }
  return out + ")";
}

std::size_t WeightVecHash::operator()(const WeightVec& w) const noexcept {
  std::size_t h = w.rank();
  for (const auto& x : w.coords()) h = h * 1000003u ^ hash_value(x);
  return h;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::pair<IntMatrix, Integer> clear_denominators(const RatMatrix& m) {
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) scale = lcm(scale, m(i, j).get_den());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * scale;
      out(i, j) = x.get_num();
    }
  return {out, scale};
}

RatVector row_times(const RatVector& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw InputError("vector/matrix dimension mismatch");
  RatVector out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

} // namespace springer
