#pragma once

#include "dimdatum/weight.hpp"
#include "dimdatum/weyl_group.hpp"

#include <string>
#include <vector>

namespace dimdatum {

enum class RootType { Empty, A, B, C, D, BC };

std::string toString(RootType t);

/// A classical root system realized in Z^n: A_{n-1}, B_n, C_n, D_n, BC_n, or
/// the empty system. The positive system is "first nonzero coordinate positive".
class SubRootSystem {
 public:
  SubRootSystem(RootType type, std::size_t rank);

  static SubRootSystem empty(std::size_t n) { return {RootType::Empty, n}; }
  static SubRootSystem typeA(std::size_t n) { return {RootType::A, n}; }
  static SubRootSystem typeB(std::size_t n) { return {RootType::B, n}; }
  static SubRootSystem typeC(std::size_t n) { return {RootType::C, n}; }
  static SubRootSystem typeD(std::size_t n) { return {RootType::D, n}; }
  static SubRootSystem typeBC(std::size_t n) { return {RootType::BC, n}; }

  RootType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positiveRoots() const { return positive_; }
  WeylGroup weylGroup() const;
  std::string name() const;

  /// Reflection closure: s_α(β) ∈ Φ for all α, β.
  bool isReflectionClosed() const;
  /// 2(λ,α)/(α,α) ∈ Z for every root α and every λ ∈ Z^n.
  bool isStronglyIntegral() const;

 private:
  RootType type_;
  std::size_t rank_;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_;
};

/// Half-sum of the positive roots (exact, possibly half-integral).
Weight deltaPhi(const SubRootSystem& phi);

}  // namespace dimdatum
