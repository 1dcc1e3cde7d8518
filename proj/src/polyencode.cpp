#include "dimdatum/polyencode.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace dimdatum {

namespace {

MultiPoly x(std::int64_t index) { return MultiPoly::variable(static_cast<int>(std::llabs(index))); }

void requireSorted(const Weight& lambda, std::size_t n, const char* what) {
  if (lambda.rank() != n)
    throw std::invalid_argument(std::string(what) + ": weight " + lambda.toString() +
                                " does not have rank " + std::to_string(n));
  if (!lambda.isIntegral())
    throw std::invalid_argument(std::string(what) + ": weight must be integral");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda.at(i) < lambda.at(i + 1))
      throw std::invalid_argument(std::string(what) + ": weight " + lambda.toString() +
                                  " is not non-increasing");
}

SubRootSystem familyRootSystem(FamilyKind kind, std::size_t n) {
  switch (kind) {
    case FamilyKind::a: return SubRootSystem::typeA(n);
    case FamilyKind::b:
    case FamilyKind::bPrime: return SubRootSystem::typeB(n);
    case FamilyKind::c: return SubRootSystem::typeC(n);
    case FamilyKind::d: return SubRootSystem::typeD(n);
  }
  throw std::logic_error("unknown family kind");
}

std::int64_t coordinateSum(const Weight& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w.at(i);
  return s;
}

// Brute-force route without admissibility checks: average over W_n, then encode.
MultiPoly averagedFamily(FamilyKind kind, std::size_t n, const Weight& lambda) {
  const auto phi = familyRootSystem(kind, n);
  MultiPoly p = encodeE(fPhiLambdaW(phi, lambda, WeylGroup::hyperoctahedral(n)));
  if (kind == FamilyKind::bPrime) {
    p = sigma(p);
    if (coordinateSum(lambda) % 2 != 0) p = -p;
  }
  return p;
}

Weight prefix(const Weight& w, std::size_t len) {
  auto c = w.integralCoords();
  c.resize(len);
  return Weight::integral(c);
}

IdentityResult compare(std::string name, MultiPoly lhs, MultiPoly rhs, std::string lhsRoute,
                       std::string rhsRoute) {
  IdentityResult r;
  r.identity = std::move(name);
  r.diff = lhs - rhs;
  r.pass = r.diff.isZero();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.lhsRoute = std::move(lhsRoute);
  r.rhsRoute = std::move(rhsRoute);
  return r;
}

}  // namespace

Monomial orbitMonomial(const Weight& lambda) {
  std::vector<int> idx;
  idx.reserve(lambda.rank());
  for (std::size_t i = 0; i < lambda.rank(); ++i) idx.push_back(static_cast<int>(std::llabs(lambda.at(i))));
  return Monomial(std::move(idx));
}

MultiPoly encodeE(const FormalCharacter& f) {
  if (!f.isInvariantUnder(WeylGroup::hyperoctahedral(f.rank())))
    throw std::invalid_argument("encodeE: character is not invariant under W_" + std::to_string(f.rank()));
  // An invariant f is Σ over orbits of c·|orbit|·χ*, and |orbit|·c is the sum of
  // the coefficients over the orbit.
  MultiPoly out;
  for (const auto& [w, c] : f.terms()) {
    if (!w.isIntegral()) throw std::invalid_argument("encodeE: half-integral weight " + w.toString());
    out.add(orbitMonomial(w), QSqrt2(c));
  }
  return out;
}

std::string toString(MatrixKind k) {
  switch (k) {
    case MatrixKind::A: return "A";
    case MatrixKind::B: return "B";
    case MatrixKind::BPrime: return "B'";
    case MatrixKind::C: return "C";
    case MatrixKind::D: return "D";
    case MatrixKind::DPrime: return "D'";
  }
  return "?";
}

std::string toString(FamilyKind k) {
  switch (k) {
    case FamilyKind::a: return "a";
    case FamilyKind::b: return "b";
    case FamilyKind::bPrime: return "b'";
    case FamilyKind::c: return "c";
    case FamilyKind::d: return "d";
  }
  return "?";
}

PolyMatrix buildMatrix(MatrixKind kind, std::size_t n, const Weight& lambda) {
  if (n == 0) throw std::invalid_argument("buildMatrix: n must be positive");
  requireSorted(lambda, n, "buildMatrix");
  if (kind != MatrixKind::A && lambda.at(n - 1) < 0)
    throw std::invalid_argument("buildMatrix: kind " + toString(kind) + " needs a non-negative last entry");
  const auto N = static_cast<std::int64_t>(n);
  const QSqrt2 root2 = QSqrt2::sqrt2();
  const QSqrt2 halfRoot2(0, Rational(1, 2));
  PolyMatrix m(n, n);
  for (std::int64_t i = 1; i <= N; ++i)
    for (std::int64_t j = 1; j <= N; ++j) {
      const std::int64_t k = lambda.at(static_cast<std::size_t>(j - 1));
      MultiPoly& e = m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      switch (kind) {
        case MatrixKind::A: e = x(k + i - j); break;
        case MatrixKind::B: e = x(k + i - j) - x(k + 2 * N + 1 - i - j); break;
        case MatrixKind::BPrime: e = x(k + i - j) + x(k + 2 * N + 1 - i - j); break;
        case MatrixKind::C: e = x(k + i - j) - x(k + 2 * N + 2 - i - j); break;
        case MatrixKind::D: e = x(k + i - j) + x(k + 2 * N - i - j); break;
        case MatrixKind::DPrime:
          if (i < N && j < N) e = x(k + i - j) + x(k + 2 * N - i - j);
          else if (i == N && j < N) e = x(k + N - j).scaled(root2);
          else if (i < N && j == N) e = (x(k + i - N) + x(k + N - i)).scaled(halfRoot2);
          else e = x(k);
          break;
      }
    }
  return m;
}

MultiPoly familyPolynomial(FamilyKind kind, std::size_t n, const Weight& lambda) {
  if (n == 0) throw std::invalid_argument("familyPolynomial: n must be positive");
  requireSorted(lambda, n, "familyPolynomial");
  const std::int64_t last = lambda.at(n - 1);
  if (kind == FamilyKind::d) {
    if (n >= 2 ? lambda.at(n - 2) < std::llabs(last) : last < 0)
      throw std::invalid_argument("familyPolynomial: " + lambda.toString() + " is not D-dominant");
  } else if (kind != FamilyKind::a && last < 0) {
    throw std::invalid_argument("familyPolynomial: kind " + toString(kind) +
                                " needs a non-negative last entry");
  }
  return averagedFamily(kind, n, lambda);
}

bool LemmaReport::allPass() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.pass; });
}

LemmaReport verifyLemma(std::size_t n, const Weight& lambda) {
  requireSorted(lambda, n, "verifyLemma");
  LemmaReport report;
  report.n = n;
  report.lambda = lambda;
  const std::string detRoute = "subset-memoized Laplace determinant of the structured matrix";
  const std::string avgRoute = "full Weyl-group average of A_{Phi,lambda} over W_n, then E-encoding";
  auto det = [&](MatrixKind k) { return symbolicDet(buildMatrix(k, n, lambda)); };

  report.identities.push_back(
      compare("A", det(MatrixKind::A), familyPolynomial(FamilyKind::a, n, lambda), detRoute, avgRoute));
  if (lambda.at(n - 1) < 0) return report;

  report.identities.push_back(
      compare("B", det(MatrixKind::B), familyPolynomial(FamilyKind::b, n, lambda), detRoute, avgRoute));
  report.identities.push_back(compare("B'", det(MatrixKind::BPrime),
                                      familyPolynomial(FamilyKind::bPrime, n, lambda), detRoute,
                                      avgRoute + ", sign and sigma"));
  report.identities.push_back(
      compare("C", det(MatrixKind::C), familyPolynomial(FamilyKind::c, n, lambda), detRoute, avgRoute));
  const MultiPoly d = familyPolynomial(FamilyKind::d, n, lambda);
  report.identities.push_back(compare("D", det(MatrixKind::D).scaled(QSqrt2(Rational(1, 2))), d,
                                      "one half of " + detRoute, avgRoute));
  report.identities.push_back(compare("D'", det(MatrixKind::DPrime), d, detRoute, avgRoute));
  return report;
}

PropReport verifyProp(std::size_t m, const Weight& lambda) {
  if (m == 0) throw std::invalid_argument("verifyProp: m must be positive");
  const std::size_t n = lambda.rank();
  if (n != 2 * m && n != 2 * m + 1)
    throw std::invalid_argument("verifyProp: weight length must be 2m or 2m+1");
  requireSorted(lambda, n, "verifyProp");
  for (std::size_t i = 0; i < m; ++i)
    if (lambda.at(i) + lambda.at(n - 1 - i) != 0)
      throw std::invalid_argument("verifyProp: " + lambda.toString() + " violates k_i + k_{n+1-i} = 0");

  PropReport r;
  r.m = m;
  r.lambda = lambda;
  r.odd = (n == 2 * m + 1);
  r.lambda1 = prefix(lambda, m);
  r.lhs = averagedFamily(FamilyKind::a, n, lambda);
  if (r.odd) {
    r.lambda2 = prefix(lambda, m + 1);
    r.middle = lambda.at(m);
    r.rhs = averagedFamily(FamilyKind::c, m, r.lambda1) * averagedFamily(FamilyKind::d, m + 1, r.lambda2);
  } else {
    r.lambda2 = r.lambda1;
    r.rhs = averagedFamily(FamilyKind::b, m, r.lambda1) * averagedFamily(FamilyKind::bPrime, m, r.lambda2);
  }
  r.diff = r.lhs - r.rhs;
  r.pass = r.diff.isZero();
  return r;
}

std::vector<Weight> sortedWeights(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  std::vector<std::int64_t> cur(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t maxVal) {
    if (pos == n) {
      out.push_back(Weight::integral(cur));
      return;
    }
    for (std::int64_t v = lo; v <= maxVal; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  if (lo <= hi) rec(0, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> constrainedWeights(std::size_t m, bool odd, std::int64_t bound) {
  std::vector<Weight> out;
  const std::size_t n = odd ? 2 * m + 1 : 2 * m;
  for (const auto& head : sortedWeights(m, 0, bound)) {
    auto h = head.integralCoords();
    // Even case: the head must end at k_m ≥ -k_m, i.e. k_m ≥ 0, which holds here.
    std::vector<std::int64_t> middles;
    if (odd) {
      const std::int64_t top = m ? h[m - 1] : bound;
      for (std::int64_t v = -top; v <= top; ++v) middles.push_back(v);
    } else {
      middles.push_back(0);
    }
    for (auto mid : middles) {
      std::vector<std::int64_t> c(n);
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = h[i];
        c[n - 1 - i] = -h[i];
      }
      if (odd) c[m] = mid;
      out.push_back(Weight::integral(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dimdatum
