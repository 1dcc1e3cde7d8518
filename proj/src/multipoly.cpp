#include "dimdatum/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dimdatum {

std::string QSqrt2::toString() const {
  if (b == 0) return toFractionString(a);
  return toFractionString(a) + (b > 0 ? "+" : "") + toFractionString(b) + "√2";
}

Monomial::Monomial(std::vector<int> indices) : idx_(std::move(indices)) {
  std::erase(idx_, 0);
  for (int i : idx_)
    if (i < 0) throw std::invalid_argument("monomial index must be non-negative");
  std::sort(idx_.begin(), idx_.end(), std::greater<>());
}

Monomial Monomial::variable(int index) { return Monomial(std::vector<int>{index}); }

int Monomial::oddCount() const {
  return static_cast<int>(std::count_if(idx_.begin(), idx_.end(), [](int i) { return i % 2 != 0; }));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.idx_.resize(idx_.size() + o.idx_.size());
  std::merge(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(), out.idx_.begin(), std::greater<>());
  return out;
}

std::string Monomial::toString() const {
  if (idx_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < idx_.size();) {
    std::size_t j = i;
    while (j < idx_.size() && idx_[j] == idx_[i]) ++j;
    if (i) os << '*';
    os << 'x' << idx_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return x.indices() < y.indices();
}

MultiPoly::MultiPoly(const QSqrt2& constant) { add(Monomial(), constant); }

MultiPoly MultiPoly::variable(int index, const QSqrt2& coefficient) {
  return term(Monomial::variable(index), coefficient);
}

MultiPoly MultiPoly::term(const Monomial& m, const QSqrt2& coefficient) {
  MultiPoly p;
  p.add(m, coefficient);
  return p;
}

QSqrt2 MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QSqrt2() : it->second;
}

void MultiPoly::add(const Monomial& m, const QSqrt2& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add(mx * my, cx * cy);
  return out;
}

MultiPoly MultiPoly::scaled(const QSqrt2& s) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.add(m, c * s);
  return out;
}

std::size_t MultiPoly::maxStoredDegree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool MultiPoly::isHomogeneousOfDegree(std::size_t n) const { return maxStoredDegree() <= n; }

bool MultiPoly::hasRationalCoefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.isRational(); });
}

bool MultiPoly::hasIntegerCoefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.second.isRational() && isInteger(t.second.a);
  });
}

std::string MultiPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.toString();
    if (m.degree() > 0) os << '*' << m.toString();
  }
  return os.str();
}

MultiPoly sigma(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) out.add(m, m.oddCount() % 2 ? -c : c);
  return out;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(QSqrt2(1));
  return m;
}

MultiPoly symbolicDet(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symbolicDet: matrix is not square");
  const std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("symbolicDet: size too large for subset expansion");
  if (n == 0) return MultiPoly(QSqrt2(1));
  // minors[S]: signed sum over assignments of rows 0..|S|-1 to the column set S.
  std::vector<MultiPoly> minors(std::size_t{1} << n);
  minors[0] = MultiPoly(QSqrt2(1));
  for (std::size_t s = 0; s < minors.size(); ++s) {
    if (minors[s].isZero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (s & (std::size_t{1} << c)) continue;
      if (m(row, c).isZero()) continue;
      // Columns already used that lie to the right of c form inversions.
      const int inversions = __builtin_popcountll(s >> (c + 1));
      MultiPoly prod = minors[s] * m(row, c);
      if (inversions % 2) minors[s | (std::size_t{1} << c)] -= prod;
      else minors[s | (std::size_t{1} << c)] += prod;
    }
  }
  return minors.back();
}

}  // namespace dimdatum
