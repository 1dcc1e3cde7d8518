#pragma once

#include "dimdatum/character.hpp"
#include "dimdatum/group.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dimdatum {

/// ∏_{α>0} (λ+δ, α)/(δ, α).
std::int64_t weylDimension(const GroupDescriptor& g, const HighestWeight& lambda);

/// Multiplicities of the dominant weights of V(λ), by Freudenthal's recursion.
std::map<Weight, std::int64_t> dominantMultiplicities(const GroupDescriptor& g, const HighestWeight& lambda);

/// Full weight multiplicities of an irreducible representation.
struct WeightMultiplicityTable {
  GroupDescriptor group;
  HighestWeight highest;
  std::map<Weight, std::int64_t> multiplicities;

  std::int64_t multiplicity(const Weight& mu) const;
  std::int64_t totalMass() const;
};

WeightMultiplicityTable weightMultiplicities(const GroupDescriptor& g, const HighestWeight& lambda);

/// The table rendered as an element of Q[X*(T)].
FormalCharacter weylCharacter(const GroupDescriptor& g, const HighestWeight& lambda);
FormalCharacter toCharacter(const WeightMultiplicityTable& t);

/// H ⊂ G realized on tori: `restriction` (rows = H coordinates, columns = G
/// coordinates) sends G-weights to H-weights.
class Embedding {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// Explicit torus map. Throws if the shape is wrong or the map does not kill
  /// (1,...,1) on SU blocks of G.
  Embedding(GroupDescriptor source, GroupDescriptor target, Matrix restriction, std::string name = "custom");

  /// H₁ = {(A, Ā) : A ∈ U(2n+1)} ⊂ SU(4n+2).
  static Embedding h1(std::size_t n);
  /// H₂ = Sp(n) × SO(2n+2) ⊂ SU(4n+2), block diagonal.
  static Embedding h2(std::size_t n);
  /// H = G.
  static Embedding identity(const GroupDescriptor& g);
  /// H = {1}.
  static Embedding trivialSubgroup(const GroupDescriptor& g);

  const GroupDescriptor& source() const { return source_; }
  const GroupDescriptor& target() const { return target_; }
  const Matrix& restriction() const { return map_; }
  const std::string& name() const { return name_; }

  /// Image of a G-weight in H's (normalized) coordinates.
  Weight restrict(const Weight& w) const;

 private:
  GroupDescriptor source_;
  GroupDescriptor target_;
  Matrix map_;
  std::string name_;
};

/// Weights of the defining (standard) representation of G, normalized.
std::vector<Weight> definingWeights(const GroupDescriptor& g);

/// Restriction of the representation with table t to H's torus.
FormalCharacter restrictCharacter(const Embedding& e, const WeightMultiplicityTable& t);

using Decomposition = std::map<HighestWeight, std::int64_t>;

/// Splits a genuine character of H into irreducibles by repeated highest-weight
/// subtraction (maximal (μ,δ), ties broken lexicographically). Throws
/// std::domain_error if c is not Weyl-invariant with non-negative integer
/// multiplicities throughout.
Decomposition decompose(const GroupDescriptor& h, const FormalCharacter& c);

/// Irreducible constituents of ρ|_H with multiplicities.
Decomposition branchingRule(const Embedding& e, const HighestWeight& rho);

/// dim Hom_H(τ, ρ|_H).
std::int64_t branchMultiplicity(const Embedding& e, const HighestWeight& rho, const HighestWeight& tau);

/// ρ ↦ dim Hom_H(τ, ρ|_H) over the given ρ.
std::map<HighestWeight, std::int64_t> tauDimensionDatum(const Embedding& e, const HighestWeight& tau,
                                                        const std::vector<HighestWeight>& rhos);

}  // namespace dimdatum
