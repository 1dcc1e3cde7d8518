#include "dimdatum/character.hpp"
#include "dimdatum/polyencode.hpp"
#include "dimdatum/root_system.hpp"

#include <doctest.h>

#include <random>

using namespace dimdatum;

namespace {

Weight W(std::initializer_list<std::int64_t> c) { return Weight::integral(c); }
MultiPoly x(int i) { return MultiPoly::variable(i); }
MultiPoly one() { return MultiPoly(QSqrt2(1)); }

/// Direct W_n average of A_{Φ,λ} (the brute-force side), encoded by hand:
/// orbit representatives become monomials of sorted absolute values.
MultiPoly bruteForce(const SubRootSystem& phi, const Weight& lam) {
  const auto f = fPhiLambdaW(phi, lam, WeylGroup::hyperoctahedral(lam.rank()));
  MultiPoly out;
  for (const auto& [w, c] : f.terms()) {
    std::vector<int> idx;
    for (std::int64_t v : w.integralCoords()) idx.push_back(static_cast<int>(v < 0 ? -v : v));
    // Each orbit point carries 1/|orbit| of the orbit-sum coefficient.
    out.add(Monomial(idx), QSqrt2(c));
  }
  return out;
}

MultiPoly randomPoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, 5), coef(-3, 3), len(0, 3), terms(1, 4);
  MultiPoly p;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<int> m;
    for (int k = len(rng); k > 0; --k) m.push_back(idx(rng));
    p.add(Monomial(m), QSqrt2(Rational(coef(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("encodeE examples") {
  CHECK(encodeE(FormalCharacter::monomial(W({0, 0}))) == one());
  CHECK(encodeE(chiStar(W({1, 0}), WeylGroup::hyperoctahedral(2))) == x(1));
  CHECK(encodeE(fPhiLambdaW(SubRootSystem::typeA(2), W({0, 0}), WeylGroup::hyperoctahedral(2))) ==
        one() - x(1) * x(1));
  CHECK_THROWS_AS(encodeE(FormalCharacter::monomial(W({1, 0}))), std::invalid_argument);
}

TEST_CASE("encodeE matches the hand encoding of averaged characters") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& lam : sortedWeights(n, 0, 2))
      for (const auto& phi : {SubRootSystem::typeA(n), SubRootSystem::typeB(n), SubRootSystem::typeC(n)}) {
        CHECK(encodeE(fPhiLambdaW(phi, lam, WeylGroup::hyperoctahedral(n))) == bruteForce(phi, lam));
      }
}

TEST_CASE("encodeE is multiplicative on disjoint coordinate blocks") {
  // j-embedding of a rank-1 and a rank-2 invariant into rank 3, followed by averaging over W_3.
  for (const auto& a : sortedWeights(1, 0, 2))
    for (const auto& b : sortedWeights(2, 0, 2)) {
      const auto fa = chiStar(a, WeylGroup::hyperoctahedral(1));
      const auto fb = fPhiLambdaW(SubRootSystem::typeC(2), b, WeylGroup::hyperoctahedral(2));
      FormalCharacter joint(3);
      for (const auto& [wa, ca] : fa.terms())
        for (const auto& [wb, cb] : fb.terms())
          joint.add(W({wa.at(0), wb.at(0), wb.at(1)}), ca * cb);
      const auto sym = averageOver(joint, WeylGroup::hyperoctahedral(3));
      CHECK(encodeE(sym) == encodeE(fa) * encodeE(fb));
    }
}

TEST_CASE("sigma") {
  CHECK(sigma(x(1)) == -x(1));
  CHECK(sigma(x(2) * x(3)) == -(x(2) * x(3)));
  CHECK(sigma(x(2) * x(4)) == x(2) * x(4));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto p = randomPoly(rng);
    CHECK(sigma(sigma(p)) == p);
  }
}

TEST_CASE("buildMatrix examples") {
  for (std::int64_t k = -2; k <= 3; ++k) CHECK(buildMatrix(MatrixKind::A, 1, W({k}))(0, 0) == x(k < 0 ? -k : k));
  for (std::int64_t k = 0; k <= 3; ++k) {
    CHECK(buildMatrix(MatrixKind::B, 1, W({k}))(0, 0) == x(k) - x(k + 1));
    CHECK(buildMatrix(MatrixKind::BPrime, 1, W({k}))(0, 0) == x(k) + x(k + 1));
  }
  CHECK(buildMatrix(MatrixKind::C, 1, W({1}))(0, 0) == x(1) - x(3));
  CHECK(buildMatrix(MatrixKind::D, 1, W({0}))(0, 0) == x(0) + x(0));
  CHECK_THROWS(buildMatrix(MatrixKind::A, 2, W({0, 1})));
  CHECK_THROWS(buildMatrix(MatrixKind::B, 1, W({-1})));
  // The last row and column of D' carry √2 factors.
  const auto dp = buildMatrix(MatrixKind::DPrime, 2, W({1, 0}));
  CHECK(dp(1, 0) == x(2).scaled(QSqrt2::sqrt2()));
  CHECK(dp(1, 1) == x(0));
}

TEST_CASE("symbolicDet examples") {
  for (int k = 0; k < 4; ++k) {
    PolyMatrix m(1, 1);
    m(0, 0) = x(k);
    CHECK(symbolicDet(m) == x(k));
  }
  for (std::int64_t k = 0; k <= 3; ++k)
    CHECK(symbolicDet(buildMatrix(MatrixKind::A, 2, W({k, -k}))) == x(k) * x(k) - x(k + 1) * x(k + 1));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(symbolicDet(PolyMatrix::identity(n)) == one());
  CHECK_THROWS(symbolicDet(PolyMatrix(2, 3)));
}

TEST_CASE("symbolicDet agrees with the Leibniz sum on random matrices") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = randomPoly(rng);
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = i;
      MultiPoly leibniz;
      do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
        MultiPoly prod = one();
        for (std::size_t i = 0; i < n; ++i) prod = prod * m(i, p[i]);
        leibniz += inv % 2 ? -prod : prod;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(symbolicDet(m) == leibniz);
    }
}

TEST_CASE("familyPolynomial examples") {
  CHECK(familyPolynomial(FamilyKind::a, 2, W({0, 0})) == one() - x(1) * x(1));
  for (std::int64_t k = 0; k <= 3; ++k) {
    CHECK(familyPolynomial(FamilyKind::d, 1, W({k})) == x(k));
    CHECK(familyPolynomial(FamilyKind::bPrime, 1, W({k})) == x(k) + x(k + 1));
    CHECK(familyPolynomial(FamilyKind::b, 1, W({k})) == x(k) - x(k + 1));
  }
}

TEST_CASE("b' is the signed sigma image of b") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& lam : sortedWeights(n, 0, 2)) {
      std::int64_t s = 0;
      for (auto v : lam.integralCoords()) s += v;
      const auto b = familyPolynomial(FamilyKind::b, n, lam);
      const auto sb = sigma(b);
      CHECK(familyPolynomial(FamilyKind::bPrime, n, lam) == (s % 2 ? -sb : sb));
    }
}

TEST_CASE("verifyLemma examples") {
  const auto r1 = verifyLemma(1, W({2}));
  REQUIRE(r1.identities.size() == 6);
  CHECK(r1.allPass());
  for (const auto& id : r1.identities)
    if (id.identity == "B") {
      CHECK(id.lhs == x(2) - x(3));
      CHECK(id.rhs == x(2) - x(3));
    }
  const auto r2 = verifyLemma(2, W({0, 0}));
  CHECK(r2.allPass());
  CHECK(r2.identities.front().identity == "A");
  CHECK(r2.identities.front().lhs == one() - x(1) * x(1));
  const auto r3 = verifyLemma(1, W({0}));
  for (const auto& id : r3.identities)
    if (id.identity == "D") CHECK(id.rhs == one());
  CHECK(verifyLemma(2, W({1, -2})).identities.size() == 1);
}

TEST_CASE("determinants are homogeneous of degree n with integer coefficients") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& lam : sortedWeights(n, 0, 3))
      for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::BPrime, MatrixKind::C, MatrixKind::D,
                        MatrixKind::DPrime}) {
        const auto d = symbolicDet(buildMatrix(kind, n, lam));
        CHECK(d.isHomogeneousOfDegree(n));
        CHECK(d.maxStoredDegree() <= n);
        // D' entries involve √2 but the determinant returns to the rational subring.
        CHECK(d.hasRationalCoefficients());
        if (kind != MatrixKind::DPrime) {
          const auto m = buildMatrix(kind, n, lam);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j).hasRationalCoefficients());
        }
        CHECK(d.hasIntegerCoefficients());
      }
}

TEST_CASE("verifyProp examples") {
  for (std::int64_t k = 0; k <= 3; ++k) {
    const auto r = verifyProp(1, W({k, -k}));
    CHECK(r.pass);
    CHECK(!r.odd);
    CHECK(r.rhs == (x(k) - x(k + 1)) * (x(k) + x(k + 1)));
  }
  const auto odd = verifyProp(1, W({1, 0, -1}));
  CHECK(odd.pass);
  CHECK(odd.lambda1 == W({1}));
  CHECK(odd.lambda2 == W({1, 0}));
  CHECK(verifyProp(1, W({0, 0, 0})).pass);
  CHECK_THROWS_AS(verifyProp(1, W({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(verifyProp(1, W({2, 0, -1})), std::invalid_argument);
}

TEST_CASE("constrained weights cover nonzero middle coordinates") {
  const auto ws = constrainedWeights(1, true, 1);
  CHECK(std::find(ws.begin(), ws.end(), W({1, 1, -1})) != ws.end());
  CHECK(std::find(ws.begin(), ws.end(), W({1, -1, -1})) != ws.end());
  CHECK(constrainedWeights(1, false, 0) == std::vector<Weight>{W({0, 0})});
}

TEST_CASE("canonical polynomial text") {
  const auto p = x(1) * x(1) - one() + x(3);
  CHECK(p.toString() == "-1/1 + 1/1*x3 + 1/1*x1^2");
  CHECK((x(0).scaled(QSqrt2(Rational(1), Rational(-1, 2)))).toString() == "1/1-1/2√2");
}
