#include "dimdatum/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace dimdatum {

Weight Weight::integral(std::span<const std::int64_t> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.twice_[i] = 2 * coords[i];
  return w;
}

Weight Weight::integral(std::initializer_list<std::int64_t> coords) {
  return integral(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

Weight Weight::fromDoubled(std::vector<std::int64_t> doubled) {
  Weight w;
  w.twice_ = std::move(doubled);
  return w;
}

bool Weight::isIntegral() const {
  for (auto v : twice_)
    if (v % 2 != 0) return false;
  return true;
}

bool Weight::isZero() const {
  for (auto v : twice_)
    if (v != 0) return false;
  return true;
}

std::int64_t Weight::at(std::size_t i) const {
  if (twice_[i] % 2 != 0) throw std::domain_error("half-integral coordinate in " + toString());
  return twice_[i] / 2;
}

std::vector<std::int64_t> Weight::integralCoords() const {
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = at(i);
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  requireSameRank(*this, o);
  for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] += o.twice_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  requireSameRank(*this, o);
  for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] -= o.twice_[i];
  return *this;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(std::int64_t k) const {
  Weight w = *this;
  for (auto& v : w.twice_) v *= k;
  return w;
}

Rational Weight::dot(const Weight& o) const {
  requireSameRank(*this, o);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < twice_.size(); ++i) s += twice_[i] * o.twice_[i];
  return makeRational(s, 4);
}

std::string Weight::toString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (i) os << ',';
    if (twice_[i] % 2 == 0)
      os << twice_[i] / 2;
    else
      os << twice_[i] << "/2";
  }
  os << ')';
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.rank();
  for (auto v : w.doubledCoords()) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void requireSameRank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
}

}  // namespace dimdatum
