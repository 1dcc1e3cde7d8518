#include "dimdatum/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dimdatum {

namespace {

Weight unit(std::size_t n, std::size_t i) {
  Weight w(n);
  w.setDoubled(i, 2);
  return w;
}

Weight embedBlock(const Weight& local, std::size_t offset, std::size_t total) {
  Weight w(total);
  for (std::size_t i = 0; i < local.rank(); ++i) w.setDoubled(offset + i, local.doubled(i));
  return w;
}

}  // namespace

std::string GroupFactor::name() const {
  switch (kind) {
    case FactorKind::SU: return "su" + std::to_string(param);
    case FactorKind::U: return "u" + std::to_string(param);
    case FactorKind::Sp: return "sp" + std::to_string(param);
    case FactorKind::SOEven: return "so" + std::to_string(2 * param);
    case FactorKind::SOOdd: return "so" + std::to_string(2 * param + 1);
  }
  return "?";
}

std::vector<Weight> GroupFactor::positiveRoots() const {
  const std::size_t n = param;
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back(unit(n, i) - unit(n, j));
      if (kind != FactorKind::SU && kind != FactorKind::U) roots.push_back(unit(n, i) + unit(n, j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (kind == FactorKind::Sp) roots.push_back(unit(n, i).scaled(2));
    if (kind == FactorKind::SOOdd) roots.push_back(unit(n, i));
  }
  return roots;
}

WeylGroup GroupFactor::weylGroup() const {
  switch (kind) {
    case FactorKind::SU:
    case FactorKind::U: return WeylGroup::symmetric(param);
    case FactorKind::Sp:
    case FactorKind::SOOdd: return WeylGroup::hyperoctahedral(param);
    case FactorKind::SOEven: return WeylGroup::evenSigned(param);
  }
  return WeylGroup::trivial(param);
}

GroupDescriptor::GroupDescriptor(std::vector<GroupFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.param == 0) throw std::invalid_argument("group factor of rank 0");
    offsets_.push_back(coords_);
    coords_ += f.coords();
  }
  std::vector<std::int64_t> twiceDelta(coords_, 0);
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (const auto& r : factors_[k].positiveRoots()) {
      Weight full = embedBlock(r, offsets_[k], coords_);
      for (std::size_t i = 0; i < coords_; ++i) twiceDelta[i] += full.doubled(i) / 2;
      positive_.push_back(std::move(full));
    }
  delta_ = Weight::fromDoubled(std::move(twiceDelta));
}

GroupDescriptor GroupDescriptor::SO(std::size_t m) {
  if (m < 2) throw std::invalid_argument("SO(m) needs m >= 2");
  return GroupDescriptor({{m % 2 == 0 ? FactorKind::SOEven : FactorKind::SOOdd, m / 2}});
}

GroupDescriptor GroupDescriptor::product(const GroupDescriptor& a, const GroupDescriptor& b) {
  auto f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return GroupDescriptor(std::move(f));
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "trivial" || s == "1") return trivial();
  std::vector<GroupFactor> factors;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::size_t digits = part.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) throw std::invalid_argument("unknown group: " + text);
    const std::string kind = part.substr(0, digits);
    const std::string num = part.substr(digits);
    if (num.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("unknown group: " + text);
    const std::size_t n = std::stoul(num);
    if (n == 0) throw std::invalid_argument("unknown group: " + text);
    if (kind == "su") factors.push_back({FactorKind::SU, n});
    else if (kind == "u") factors.push_back({FactorKind::U, n});
    else if (kind == "sp") factors.push_back({FactorKind::Sp, n});
    else if (kind == "so") {
      if (n < 2) throw std::invalid_argument("unknown group: " + text);
      factors.push_back({n % 2 == 0 ? FactorKind::SOEven : FactorKind::SOOdd, n / 2});
    } else {
      throw std::invalid_argument("unknown group: " + text);
    }
  }
  if (factors.empty()) throw std::invalid_argument("unknown group: " + text);
  return GroupDescriptor(std::move(factors));
}

std::string GroupDescriptor::name() const {
  if (factors_.empty()) return "trivial";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out += (k ? "x" : "") + factors_[k].name();
  return out;
}

bool GroupDescriptor::isSemisimple() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.isSemisimple(); });
}

Weight GroupDescriptor::block(const Weight& w, std::size_t factor) const {
  requireSameRank(w, Weight(coords_));
  std::vector<std::int64_t> b(factors_[factor].coords());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = w.doubled(offsets_[factor] + i);
  return Weight::fromDoubled(std::move(b));
}

Rational GroupDescriptor::innerOnFactor(std::size_t factor, const Weight& a, const Weight& b) const {
  const auto& f = factors_[factor];
  const std::size_t off = offsets_[factor];
  std::int64_t dot = 0, sa = 0, sb = 0;
  for (std::size_t i = 0; i < f.coords(); ++i) {
    dot += a.doubled(off + i) * b.doubled(off + i);
    sa += a.doubled(off + i);
    sb += b.doubled(off + i);
  }
  if (f.kind != FactorKind::SU) return makeRational(dot, 4);
  const auto n = static_cast<std::int64_t>(f.param);
  return makeRational(n * dot - sa * sb, 4 * n);
}

Rational GroupDescriptor::inner(const Weight& a, const Weight& b) const {
  requireSameRank(a, Weight(coords_));
  requireSameRank(b, Weight(coords_));
  Rational s = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) s += innerOnFactor(k, a, b);
  return s;
}

Weight GroupDescriptor::normalize(Weight w) const {
  requireSameRank(w, Weight(coords_));
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].kind != FactorKind::SU) continue;
    const std::size_t off = offsets_[k];
    const std::size_t last = off + factors_[k].coords() - 1;
    const std::int64_t shift = w.doubled(last);
    for (std::size_t i = off; i <= last; ++i) w.setDoubled(i, w.doubled(i) - shift);
  }
  return w;
}

bool GroupDescriptor::isDominant(const Weight& w) const {
  if (w.rank() != coords_) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& f = factors_[k];
    const std::size_t off = offsets_[k];
    const std::size_t n = f.coords();
    auto c = [&](std::size_t i) { return w.doubled(off + i); };
    if (f.kind == FactorKind::SOEven) {
      for (std::size_t i = 0; i + 2 < n; ++i)
        if (c(i) < c(i + 1)) return false;
      if (n >= 2 && c(n - 2) < std::llabs(c(n - 1))) return false;
      continue;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (c(i) < c(i + 1)) return false;
    if ((f.kind == FactorKind::Sp || f.kind == FactorKind::SOOdd) && c(n - 1) < 0) return false;
  }
  return true;
}

Weight GroupDescriptor::dominantRepresentative(const Weight& w) const {
  requireSameRank(w, Weight(coords_));
  Weight out = w;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& f = factors_[k];
    const std::size_t off = offsets_[k];
    const std::size_t n = f.coords();
    std::vector<std::int64_t> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = w.doubled(off + i);
    if (f.kind == FactorKind::SU || f.kind == FactorKind::U) {
      std::sort(b.begin(), b.end(), std::greater<>());
    } else {
      const auto negatives = std::count_if(b.begin(), b.end(), [](auto v) { return v < 0; });
      const bool hasZero = std::find(b.begin(), b.end(), 0) != b.end();
      for (auto& v : b) v = std::llabs(v);
      std::sort(b.begin(), b.end(), std::greater<>());
      if (f.kind == FactorKind::SOEven && negatives % 2 == 1 && !hasZero) b[n - 1] = -b[n - 1];
    }
    for (std::size_t i = 0; i < n; ++i) out.setDoubled(off + i, b[i]);
  }
  return normalize(out);
}

std::vector<Weight> GroupDescriptor::generatorImages(const Weight& w) const {
  std::vector<Weight> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const Weight local = block(w, k);
    for (const auto& g : factors_[k].weylGroup().generators()) {
      Weight image = w;
      const Weight moved = g.apply(local);
      for (std::size_t i = 0; i < moved.rank(); ++i) image.setDoubled(offsets_[k] + i, moved.doubled(i));
      out.push_back(normalize(std::move(image)));
    }
  }
  return out;
}

std::vector<Weight> GroupDescriptor::orbitOf(const Weight& w) const {
  std::set<Weight> seen{normalize(w)};
  std::vector<Weight> frontier{*seen.begin()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier)
      for (auto& img : generatorImages(v))
        if (seen.insert(img).second) next.push_back(std::move(img));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t GroupDescriptor::weylOrder() const {
  std::uint64_t order = 1;
  for (const auto& f : factors_) order *= f.weylGroup().order();
  return order;
}

HighestWeight::HighestWeight(const GroupDescriptor& g, const Weight& w) {
  if (w.rank() != g.coords())
    throw std::invalid_argument("highest weight " + w.toString() + " has wrong rank for " + g.name());
  if (!w.isIntegral()) throw std::invalid_argument("highest weight " + w.toString() + " is not integral");
  weight_ = g.normalize(w);
  if (!g.isDominant(weight_))
    throw std::invalid_argument("weight " + w.toString() + " is not dominant for " + g.name());
}

HighestWeight HighestWeight::trivial(const GroupDescriptor& g) { return HighestWeight(g, Weight(g.coords())); }

HighestWeight HighestWeight::fromParts(const GroupDescriptor& g,
                                       const std::vector<std::vector<std::int64_t>>& parts) {
  if (parts.size() != g.factors().size())
    throw std::invalid_argument("expected " + std::to_string(g.factors().size()) + " weight blocks for " + g.name());
  std::vector<std::int64_t> flat;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].size() != g.factors()[k].coords())
      throw std::invalid_argument("block " + std::to_string(k + 1) + " of the weight for " + g.name() +
                                  " needs " + std::to_string(g.factors()[k].coords()) + " entries");
    flat.insert(flat.end(), parts[k].begin(), parts[k].end());
  }
  return HighestWeight(g, Weight::integral(flat));
}

std::vector<std::vector<std::int64_t>> HighestWeight::parts(const GroupDescriptor& g) const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t k = 0; k < g.factors().size(); ++k) out.push_back(g.block(weight_, k).integralCoords());
  return out;
}

std::string HighestWeight::toString(const GroupDescriptor& g) const {
  if (g.factors().empty()) return "()";
  std::string out;
  for (std::size_t k = 0; k < g.factors().size(); ++k) out += (k ? ";" : "") + g.block(weight_, k).toString();
  return out;
}

}  // namespace dimdatum
