#pragma once

#include "dimdatum/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dimdatum {

/// A point of the lattice Z^n, or of (1/2)Z^n when half-integral values are
/// needed (half-sums of positive roots). Coordinates are stored doubled.
class Weight {
 public:
  Weight() = default;
  /// Zero weight of the given rank.
  explicit Weight(std::size_t rank) : twice_(rank, 0) {}

  static Weight integral(std::span<const std::int64_t> coords);
  static Weight integral(std::initializer_list<std::int64_t> coords);
  static Weight fromDoubled(std::vector<std::int64_t> doubled);

  std::size_t rank() const { return twice_.size(); }
  std::int64_t doubled(std::size_t i) const { return twice_[i]; }
  const std::vector<std::int64_t>& doubledCoords() const { return twice_; }
  void setDoubled(std::size_t i, std::int64_t v) { twice_[i] = v; }

  bool isIntegral() const;
  bool isZero() const;
  /// Integral coordinate; throws std::domain_error when half-integral.
  std::int64_t at(std::size_t i) const;
  std::vector<std::int64_t> integralCoords() const;
  Rational coord(std::size_t i) const { return makeRational(twice_[i], 2); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  Weight scaled(std::int64_t k) const;

  /// Euclidean pairing of the mathematical coordinates.
  Rational dot(const Weight& o) const;

  /// "(1,0,-1)"; half-integral entries print as "3/2".
  std::string toString() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> twice_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

void requireSameRank(const Weight& a, const Weight& b);

}  // namespace dimdatum
