#pragma once

#include "dimdatum/rational.hpp"
#include "dimdatum/root_system.hpp"
#include "dimdatum/weight.hpp"
#include "dimdatum/weyl_group.hpp"

#include <map>
#include <set>
#include <string>

namespace dimdatum {

/// Element of Q[Z^n]: a finite formal sum of weights with rational coefficients.
/// Zero coefficients are never stored.
class FormalCharacter {
 public:
  using Terms = std::map<Weight, Rational>;

  explicit FormalCharacter(std::size_t rank = 0) : rank_(rank) {}
  /// The single term coefficient·[w].
  static FormalCharacter monomial(const Weight& w, const Rational& coefficient = 1);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(const Weight& w) const;

  void add(const Weight& w, const Rational& c);

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  FormalCharacter& operator*=(const Rational& s);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(FormalCharacter a, const Rational& s) { return a *= s; }

  /// γ(f): pushes every weight through the signed permutation.
  FormalCharacter transformed(const SignedPermutation& g) const;
  /// Term-by-term fixedness under every element of W (checked on generators).
  bool isInvariantUnder(const WeylGroup& w) const;

  /// One line per term, "p/q : (k1,...,kn)", weights in lexicographic order.
  std::string toText() const;

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Ring product of Q[Z^n] (convolution of supports).
FormalCharacter multiply(const FormalCharacter& f, const FormalCharacter& g);

/// Wλ without duplicates.
std::set<Weight> orbit(const Weight& lambda, const WeylGroup& w);

/// χ*_{λ,W} = (1/|W|) Σ_{γ∈W} [γλ].
FormalCharacter chiStar(const Weight& lambda, const WeylGroup& w);

/// A_{Φ,λ} = Σ_{w∈W_Φ} sgn(w) [λ + δ_Φ − wδ_Φ].
FormalCharacter aPhiLambda(const SubRootSystem& phi, const Weight& lambda);

/// F_{Φ,λ,W} = (1/|W|) Σ_{γ∈W} γ(A_{Φ,λ}). Requires W ⊇ W_Φ.
FormalCharacter fPhiLambdaW(const SubRootSystem& phi, const Weight& lambda, const WeylGroup& w);

/// The same character assembled as Σ_{w∈W_Φ} sgn(w) χ*_{λ+δ−wδ, W}.
FormalCharacter fPhiLambdaWViaChiStar(const SubRootSystem& phi, const Weight& lambda,
                                      const WeylGroup& w);

/// F_Φ = (1/|W_Φ|) ∏_{α∈Φ} (1 − [α]).
FormalCharacter weylProduct(const SubRootSystem& phi);

/// (1/|W|) Σ_{γ∈W} γ(f).
FormalCharacter averageOver(const FormalCharacter& f, const WeylGroup& w);

}  // namespace dimdatum
