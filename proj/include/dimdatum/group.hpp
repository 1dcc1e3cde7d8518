#pragma once

#include "dimdatum/rational.hpp"
#include "dimdatum/weight.hpp"
#include "dimdatum/weyl_group.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dimdatum {

enum class FactorKind { SU, U, Sp, SOEven, SOOdd };

/// One simple (or U(N)) factor. `param` is N for SU(N)/U(N) and the rank n for
/// Sp(n), SO(2n), SO(2n+1).
struct GroupFactor {
  FactorKind kind;
  std::size_t param;

  std::size_t coords() const { return param; }
  std::string name() const;
  /// Positive roots in the factor's own coordinates.
  std::vector<Weight> positiveRoots() const;
  /// Orthogonal or unitary type of its Weyl group on the factor coordinates.
  WeylGroup weylGroup() const;
  bool isSemisimple() const { return kind != FactorKind::U && !(kind == FactorKind::SOEven && param == 1); }
  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// A product of classical compact groups with the torus coordinates of the
/// factors concatenated. SU(N) weights are taken modulo (1,...,1) and stored
/// with the last coordinate of their block equal to 0.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  explicit GroupDescriptor(std::vector<GroupFactor> factors);

  static GroupDescriptor SU(std::size_t n) { return GroupDescriptor({{FactorKind::SU, n}}); }
  static GroupDescriptor U(std::size_t n) { return GroupDescriptor({{FactorKind::U, n}}); }
  static GroupDescriptor Sp(std::size_t n) { return GroupDescriptor({{FactorKind::Sp, n}}); }
  /// SO(m) for m ≥ 2; even m gives type D, odd m type B.
  static GroupDescriptor SO(std::size_t m);
  static GroupDescriptor trivial() { return GroupDescriptor(std::vector<GroupFactor>{}); }
  static GroupDescriptor product(const GroupDescriptor& a, const GroupDescriptor& b);
  /// "su6", "u3", "sp1xso4", "su2xsu2", "so5", "trivial".
  static GroupDescriptor parse(const std::string& name);

  const std::vector<GroupFactor>& factors() const { return factors_; }
  std::size_t coords() const { return coords_; }
  std::size_t offset(std::size_t factor) const { return offsets_[factor]; }
  std::string name() const;
  bool isSemisimple() const;

  /// Positive roots embedded in the full coordinate space.
  const std::vector<Weight>& positiveRoots() const { return positive_; }
  /// Half-sum of positive roots (possibly half-integral).
  const Weight& delta() const { return delta_; }

  /// W-invariant positive definite form: the trace form on each block, centered
  /// on SU blocks.
  Rational inner(const Weight& a, const Weight& b) const;
  Rational innerOnFactor(std::size_t factor, const Weight& a, const Weight& b) const;
  /// (μ, δ): strictly positive on positive roots.
  Rational height(const Weight& mu) const { return inner(mu, delta_); }

  /// Puts SU blocks into the last-coordinate-zero form.
  Weight normalize(Weight w) const;
  bool isDominant(const Weight& w) const;
  /// The dominant element of w's Weyl orbit (normalized).
  Weight dominantRepresentative(const Weight& w) const;
  /// W·w for the product Weyl group (normalized).
  std::vector<Weight> orbitOf(const Weight& w) const;
  /// Weights obtained from w by one Weyl generator.
  std::vector<Weight> generatorImages(const Weight& w) const;
  std::uint64_t weylOrder() const;

  Weight block(const Weight& w, std::size_t factor) const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<GroupFactor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t coords_ = 0;
  std::vector<Weight> positive_;
  Weight delta_;
};

/// A dominant, normalized weight of a specific group.
class HighestWeight {
 public:
  HighestWeight() = default;
  /// Normalizes SU blocks and checks dominance; throws std::invalid_argument otherwise.
  HighestWeight(const GroupDescriptor& g, const Weight& w);
  static HighestWeight trivial(const GroupDescriptor& g);
  static HighestWeight fromParts(const GroupDescriptor& g, const std::vector<std::vector<std::int64_t>>& parts);

  const Weight& weight() const { return weight_; }
  std::vector<std::vector<std::int64_t>> parts(const GroupDescriptor& g) const;
  bool isTrivial() const { return weight_.isZero(); }
  /// Per-factor lists, e.g. "(1);(1,0)".
  std::string toString(const GroupDescriptor& g) const;

  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  Weight weight_;
};

}  // namespace dimdatum
