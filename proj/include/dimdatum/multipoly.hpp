#pragma once

#include "dimdatum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace dimdatum {

/// a + b√2 with rational a, b.
struct QSqrt2 {
  Rational a;
  Rational b;

  QSqrt2() = default;
  QSqrt2(Rational rational) : a(std::move(rational)) {}  // NOLINT: implicit by design of the ring
  QSqrt2(Rational rational, Rational surd) : a(std::move(rational)), b(std::move(surd)) {}
  static QSqrt2 sqrt2() { return {0, 1}; }

  bool isZero() const { return a == 0 && b == 0; }
  bool isRational() const { return b == 0; }

  QSqrt2& operator+=(const QSqrt2& o) { a += o.a; b += o.b; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a -= o.a; b -= o.b; return *this; }
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  QSqrt2 operator-() const { return {-a, -b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }

  /// "p/q" or "p/q+r/s√2".
  std::string toString() const;
};

/// x_{i1} x_{i2} ... with indices ≥ 1 kept non-increasing; x_0 = 1 is never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices);
  static Monomial variable(int index);  // x_0 gives the empty monomial

  const std::vector<int>& indices() const { return idx_; }
  std::size_t degree() const { return idx_.size(); }
  int oddCount() const;
  Monomial operator*(const Monomial& o) const;

  /// "1", "x1", "x3^2*x1".
  std::string toString() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> idx_;
};

/// Total degree first, then lexicographic on the index list.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Sparse polynomial in x_1, x_2, ... over Q(√2). Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, QSqrt2, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const QSqrt2& constant);  // NOLINT
  static MultiPoly variable(int index, const QSqrt2& coefficient = Rational(1));
  static MultiPoly term(const Monomial& m, const QSqrt2& coefficient);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  QSqrt2 coefficient(const Monomial& m) const;
  void add(const Monomial& m, const QSqrt2& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  MultiPoly operator-() const;
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  MultiPoly scaled(const QSqrt2& s) const;

  /// Largest number of stored indices over all monomials (0 for constants and zero).
  std::size_t maxStoredDegree() const;
  /// Every monomial has at most `n` stored indices; the rest of its degree is
  /// carried by implicit x_0 factors.
  bool isHomogeneousOfDegree(std::size_t n) const;
  bool hasRationalCoefficients() const;
  bool hasIntegerCoefficients() const;

  /// Terms in MonomialOrder joined by " + ", each as "coef" or "coef*monomial".
  std::string toString() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  Terms terms_;
};

/// σ: x_i ↦ −x_i for odd i, x_i ↦ x_i for even i.
MultiPoly sigma(const MultiPoly& p);

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> data_;
};

/// Exact determinant by Laplace expansion memoized over column subsets:
/// O(n·2^n) polynomial products, no division.
MultiPoly symbolicDet(const PolyMatrix& m);

}  // namespace dimdatum
