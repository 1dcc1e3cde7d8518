#include "dimdatum/root_system.hpp"

#include <algorithm>
#include <set>

namespace dimdatum {

namespace {

Weight unit(std::size_t n, std::size_t i, std::int64_t scale = 1) {
  Weight w(n);
  w.setDoubled(i, 2 * scale);
  return w;
}

bool firstNonzeroPositive(const Weight& w) {
  for (auto v : w.doubledCoords())
    if (v != 0) return v > 0;
  return false;
}

}  // namespace

std::string toString(RootType t) {
  switch (t) {
    case RootType::Empty: return "Empty";
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::BC: return "BC";
  }
  return "?";
}

SubRootSystem::SubRootSystem(RootType type, std::size_t rank) : type_(type), rank_(rank) {
  const std::size_t n = rank;
  const bool longPairs = type == RootType::A || type == RootType::B || type == RootType::C ||
                         type == RootType::D || type == RootType::BC;
  if (longPairs) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        roots_.push_back(unit(n, i) - unit(n, j));
        roots_.push_back(unit(n, j) - unit(n, i));
        if (type != RootType::A) {
          roots_.push_back(unit(n, i) + unit(n, j));
          roots_.push_back(-(unit(n, i) + unit(n, j)));
        }
      }
  }
  if (type == RootType::B || type == RootType::BC)
    for (std::size_t i = 0; i < n; ++i) {
      roots_.push_back(unit(n, i));
      roots_.push_back(-unit(n, i));
    }
  if (type == RootType::C || type == RootType::BC)
    for (std::size_t i = 0; i < n; ++i) {
      roots_.push_back(unit(n, i, 2));
      roots_.push_back(-unit(n, i, 2));
    }
  std::sort(roots_.begin(), roots_.end());
  for (const auto& r : roots_)
    if (firstNonzeroPositive(r)) positive_.push_back(r);
}

WeylGroup SubRootSystem::weylGroup() const {
  switch (type_) {
    case RootType::Empty: return WeylGroup::trivial(rank_);
    case RootType::A: return WeylGroup::symmetric(rank_);
    case RootType::B:
    case RootType::C:
    case RootType::BC: return WeylGroup::hyperoctahedral(rank_);
    case RootType::D: return WeylGroup::evenSigned(rank_);
  }
  return WeylGroup::trivial(rank_);
}

std::string SubRootSystem::name() const {
  if (type_ == RootType::Empty) return "Empty" + std::to_string(rank_);
  if (type_ == RootType::A) return "A" + std::to_string(rank_ - 1) + "<Z" + std::to_string(rank_) + ">";
  return toString(type_) + std::to_string(rank_);
}

bool SubRootSystem::isReflectionClosed() const {
  std::set<Weight> set(roots_.begin(), roots_.end());
  for (const auto& a : roots_) {
    const Rational aa = a.dot(a);
    for (const auto& b : roots_) {
      Rational c = 2 * b.dot(a) / aa;
      if (!isInteger(c)) return false;
      if (!set.count(b - a.scaled(toInt64(c)))) return false;
    }
  }
  return true;
}

bool SubRootSystem::isStronglyIntegral() const {
  // Linear in λ, so checking the basis e_i suffices.
  for (const auto& a : roots_) {
    const Rational aa = a.dot(a);
    for (std::size_t i = 0; i < rank_; ++i)
      if (!isInteger(2 * unit(rank_, i).dot(a) / aa)) return false;
  }
  return true;
}

Weight deltaPhi(const SubRootSystem& phi) {
  // Doubled coordinates of δ are the coordinates of Σα.
  std::vector<std::int64_t> twice(phi.rank(), 0);
  for (const auto& a : phi.positiveRoots())
    for (std::size_t i = 0; i < phi.rank(); ++i) twice[i] += a.doubled(i) / 2;
  return Weight::fromDoubled(std::move(twice));
}

}  // namespace dimdatum
