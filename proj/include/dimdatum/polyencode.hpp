#pragma once

#include "dimdatum/character.hpp"
#include "dimdatum/multipoly.hpp"
#include "dimdatum/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dimdatum {

/// Image of a W_n-invariant character in Q[x_0, x_1, ...]: the normalized orbit
/// sum of λ goes to x_{k1}···x_{kn} with (k1 ≥ ... ≥ kn ≥ 0) the sorted |λ_i|.
/// Throws std::invalid_argument if f is not W_n-invariant or not integral.
MultiPoly encodeE(const FormalCharacter& f);

/// The sorted-absolute-value representative of λ's W_n orbit, as a monomial.
Monomial orbitMonomial(const Weight& lambda);

enum class MatrixKind { A, B, BPrime, C, D, DPrime };
std::string toString(MatrixKind k);

/// The n×n structured matrix of the given kind at λ = (k1 ≥ ... ≥ kn).
/// Kinds other than A also need kn ≥ 0.
PolyMatrix buildMatrix(MatrixKind kind, std::size_t n, const Weight& lambda);

enum class FamilyKind { a, b, bPrime, c, d };
std::string toString(FamilyKind k);

/// a_n, b_n, b'_n, c_n, d_n computed by Weyl-group averaging followed by encodeE
/// (Φ = A_{n-1}, B_n, C_n, D_n). b' is (−1)^{Σk} σ(b).
/// λ must be non-increasing; b, b', c need kn ≥ 0 and d needs k_{n-1} ≥ |kn|.
MultiPoly familyPolynomial(FamilyKind kind, std::size_t n, const Weight& lambda);

struct IdentityResult {
  std::string identity;  // "A", "B", "B'", "C", "D", "D'"
  bool pass = false;
  MultiPoly lhs;
  MultiPoly rhs;
  MultiPoly diff;  // lhs − rhs
  std::string lhsRoute;
  std::string rhsRoute;
};

struct LemmaReport {
  std::size_t n = 0;
  Weight lambda;
  std::vector<IdentityResult> identities;
  bool allPass() const;
};

/// Compares each determinant of a structured matrix against the averaged
/// character it encodes. Only kinds admissible at λ are included (A always;
/// the others when kn ≥ 0).
LemmaReport verifyLemma(std::size_t n, const Weight& lambda);

struct PropReport {
  std::size_t m = 0;
  Weight lambda;
  bool odd = false;
  Weight lambda1;
  Weight lambda2;
  bool pass = false;
  MultiPoly lhs;   // a_{2m} or a_{2m+1}
  MultiPoly rhs;   // b_m·b'_m or c_m·d_{m+1}
  MultiPoly diff;
  /// k_{m+1} in the odd case.
  std::optional<std::int64_t> middle;
};

/// Checks a_{2m}(λ) = b_m(λ1)·b'_m(λ2) (λ of length 2m) or
/// a_{2m+1}(λ) = c_m(λ1)·d_{m+1}(λ2) (length 2m+1), with λ non-increasing and
/// k_{n+1-i} + k_i = 0 for i ≤ m. Throws std::invalid_argument when λ violates
/// the constraints.
PropReport verifyProp(std::size_t m, const Weight& lambda);

/// All non-increasing integer n-tuples with entries in [lo, hi].
std::vector<Weight> sortedWeights(std::size_t n, std::int64_t lo, std::int64_t hi);

/// All λ of length 2m (even) or 2m+1 (odd) satisfying the constraints of
/// verifyProp with |k_i| ≤ bound, in lexicographic order.
std::vector<Weight> constrainedWeights(std::size_t m, bool odd, std::int64_t bound);

}  // namespace dimdatum
