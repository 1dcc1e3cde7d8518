#pragma once

#include "dimdatum/weight.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dimdatum {

/// Element of {±1}^n ⋊ S_n acting on Z^n by (w·λ)_i = sign_i · λ_{perm⁻¹(i)}.
class SignedPermutation {
 public:
  /// Identity of rank n.
  explicit SignedPermutation(std::size_t n = 0);
  /// `perm[j]` is the position coordinate j is moved to; `signs[i]` is applied at position i.
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  std::size_t rank() const { return source_.size(); }
  /// perm(j): where coordinate j ends up.
  int image(std::size_t j) const;
  /// perm⁻¹(i): which coordinate lands at position i.
  int source(std::size_t i) const { return source_[i]; }
  int signAt(std::size_t i) const { return sign_[i]; }

  Weight apply(const Weight& w) const;
  void applyInto(const Weight& w, Weight& out) const;

  SignedPermutation compose(const SignedPermutation& rhs) const;  // (*this)∘rhs
  SignedPermutation inverse() const;

  /// sign(perm) · ∏ signs; the reflection-group sign for A, B/C and D types.
  int sgn() const;
  int negativeCount() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  friend class WeylGroup;
  std::vector<int> source_;
  std::vector<int> sign_;
};

enum class WeylType {
  Trivial,
  Symmetric,        // S_n, Weyl group of A_{n-1}
  Hyperoctahedral,  // W_n, Weyl group of B_n, C_n, BC_n
  EvenSigned,       // W_{D_n}
};

std::string toString(WeylType t);

/// A signed-permutation group of one of the four classical kinds. Elements are
/// streamed, never materialized as a list.
class WeylGroup {
 public:
  WeylGroup(WeylType type, std::size_t rank) : type_(type), rank_(rank) {}

  static WeylGroup trivial(std::size_t n) { return {WeylType::Trivial, n}; }
  static WeylGroup symmetric(std::size_t n) { return {WeylType::Symmetric, n}; }
  static WeylGroup hyperoctahedral(std::size_t n) { return {WeylType::Hyperoctahedral, n}; }
  static WeylGroup evenSigned(std::size_t n) { return {WeylType::EvenSigned, n}; }

  WeylType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::uint64_t order() const;

  void forEach(const std::function<void(const SignedPermutation&)>& visit) const;
  bool contains(const SignedPermutation& w) const;
  /// Subgroup test between the four kinds (same rank).
  bool containsGroup(const WeylGroup& other) const;
  /// A generating set (empty for the trivial group).
  std::vector<SignedPermutation> generators() const;

  std::string name() const;

  friend bool operator==(const WeylGroup&, const WeylGroup&) = default;

 private:
  WeylType type_;
  std::size_t rank_;
};

}  // namespace dimdatum
