#include "dimdatum/reps.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace dimdatum {

namespace {

void requireHighestWeight(const GroupDescriptor& g, const HighestWeight& hw) {
  if (hw.weight().rank() != g.coords() || !g.isDominant(hw.weight()) || g.normalize(hw.weight()) != hw.weight())
    throw std::invalid_argument("not a highest weight of " + g.name() + ": " + hw.weight().toString());
}

using DominantTable = std::map<Weight, std::int64_t>;

DominantTable freudenthal(const GroupDescriptor& g, const Weight& lambda) {
  // Dominant weights of V(λ): close {λ} under μ ↦ dom(μ − α) for (μ, α) > 0.
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  std::vector<Weight> weights{lambda};
  index.emplace(lambda, 0);
  for (std::size_t q = 0; q < weights.size(); ++q) {
    const Weight mu = weights[q];
    for (const auto& a : g.positiveRoots()) {
      if (g.inner(mu, a) <= 0) continue;
      Weight next = g.dominantRepresentative(mu - a);
      if (index.emplace(next, weights.size()).second) weights.push_back(std::move(next));
    }
  }
  std::vector<Rational> height(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) height[i] = g.height(weights[i]);
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (height[x] != height[y]) return height[x] > height[y];
    return weights[x] > weights[y];
  });

  std::vector<std::int64_t> mult(weights.size(), 0);
  std::vector<bool> done(weights.size(), false);
  const Weight& delta = g.delta();
  const Weight top = lambda + delta;
  const Rational topNorm = g.inner(top, top);
  for (std::size_t idx : order) {
    const Weight& mu = weights[idx];
    if (idx == 0) {
      mult[idx] = 1;
      done[idx] = true;
      continue;
    }
    Rational numerator = 0;
    for (const auto& a : g.positiveRoots()) {
      Weight shifted = mu;
      for (;;) {
        shifted += a;
        auto it = index.find(g.dominantRepresentative(shifted));
        if (it == index.end()) break;
        if (!done[it->second]) throw std::logic_error("Freudenthal: weight processed out of order");
        if (mult[it->second] != 0) numerator += mult[it->second] * g.inner(shifted, a);
      }
    }
    const Weight md = mu + delta;
    const Rational denominator = topNorm - g.inner(md, md);
    if (denominator <= 0) throw std::logic_error("Freudenthal: non-positive denominator at " + mu.toString());
    mult[idx] = toInt64(2 * numerator / denominator);
    done[idx] = true;
  }
  DominantTable out;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (mult[i] != 0) out.emplace(weights[i], mult[i]);
  return out;
}

struct TableCache {
  std::mutex lock;
  std::map<std::pair<std::string, Weight>, std::shared_ptr<const DominantTable>> tables;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

std::shared_ptr<const DominantTable> cachedDominant(const GroupDescriptor& g, const Weight& lambda) {
  auto key = std::make_pair(g.name(), lambda);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> guard(c.lock);
    auto it = c.tables.find(key);
    if (it != c.tables.end()) return it->second;
  }
  auto table = std::make_shared<const DominantTable>(freudenthal(g, lambda));
  std::lock_guard<std::mutex> guard(c.lock);
  return c.tables.try_emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace

std::int64_t weylDimension(const GroupDescriptor& g, const HighestWeight& lambda) {
  requireHighestWeight(g, lambda);
  const Weight shifted = lambda.weight() + g.delta();
  Rational dim = 1;
  for (const auto& a : g.positiveRoots()) dim *= g.inner(shifted, a) / g.inner(g.delta(), a);
  return toInt64(dim);
}

std::map<Weight, std::int64_t> dominantMultiplicities(const GroupDescriptor& g, const HighestWeight& lambda) {
  requireHighestWeight(g, lambda);
  return *cachedDominant(g, lambda.weight());
}

std::int64_t WeightMultiplicityTable::multiplicity(const Weight& mu) const {
  auto it = multiplicities.find(mu);
  return it == multiplicities.end() ? 0 : it->second;
}

std::int64_t WeightMultiplicityTable::totalMass() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : multiplicities) s += m;
  return s;
}

WeightMultiplicityTable weightMultiplicities(const GroupDescriptor& g, const HighestWeight& lambda) {
  requireHighestWeight(g, lambda);
  WeightMultiplicityTable t{g, lambda, {}};
  for (const auto& [mu, m] : *cachedDominant(g, lambda.weight()))
    for (auto& w : g.orbitOf(mu)) t.multiplicities.emplace(std::move(w), m);
  return t;
}

FormalCharacter toCharacter(const WeightMultiplicityTable& t) {
  FormalCharacter f(t.group.coords());
  for (const auto& [w, m] : t.multiplicities) f.add(w, m);
  return f;
}

FormalCharacter weylCharacter(const GroupDescriptor& g, const HighestWeight& lambda) {
  return toCharacter(weightMultiplicities(g, lambda));
}

Embedding::Embedding(GroupDescriptor source, GroupDescriptor target, Matrix restriction, std::string name)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(restriction)), name_(std::move(name)) {
  if (map_.size() != source_.coords())
    throw std::invalid_argument("embedding: restriction map needs one row per subgroup coordinate");
  for (const auto& row : map_)
    if (row.size() != target_.coords())
      throw std::invalid_argument("embedding: restriction map needs one column per group coordinate");
  for (std::size_t k = 0; k < target_.factors().size(); ++k) {
    if (target_.factors()[k].kind != FactorKind::SU) continue;
    for (const auto& row : map_) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < target_.factors()[k].coords(); ++i) s += row[target_.offset(k) + i];
      if (s != 0) throw std::invalid_argument("embedding: map does not factor through SU weights mod (1,...,1)");
    }
  }
}

namespace {

void checkDefiningRestriction(const Embedding& e, std::vector<Weight> expected) {
  std::vector<Weight> got;
  for (const auto& w : definingWeights(e.target())) got.push_back(e.restrict(w));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) throw std::logic_error("embedding " + e.name() + ": defining representation restricts wrongly");
}

Weight signedUnit(std::size_t n, std::size_t i, int sign) {
  Weight w(n);
  w.setDoubled(i, 2 * sign);
  return w;
}

}  // namespace

Embedding Embedding::h1(std::size_t n) {
  if (n == 0) throw std::invalid_argument("h1: n must be positive");
  const std::size_t big = 4 * n + 2, small = 2 * n + 1;
  Matrix m(small, std::vector<std::int64_t>(big, 0));
  for (std::size_t i = 0; i < small; ++i) {
    m[i][i] = 1;
    m[i][small + i] = -1;
  }
  Embedding e(GroupDescriptor::U(small), GroupDescriptor::SU(big), std::move(m), "h1");
  std::vector<Weight> expected;
  for (std::size_t i = 0; i < small; ++i)
    for (int s : {1, -1}) expected.push_back(signedUnit(small, i, s));
  checkDefiningRestriction(e, expected);
  return e;
}

Embedding Embedding::h2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("h2: n must be positive");
  const std::size_t big = 4 * n + 2;
  GroupDescriptor h = GroupDescriptor::product(GroupDescriptor::Sp(n), GroupDescriptor::SO(2 * n + 2));
  Matrix m(h.coords(), std::vector<std::int64_t>(big, 0));
  // Sp block: torus diag(u_1..u_n, ū_n..ū_1).
  for (std::size_t r = 0; r < n; ++r) {
    m[r][r] = 1;
    m[r][2 * n - 1 - r] = -1;
  }
  // SO block: rotation planes with eigenvalues g_j, ḡ_j.
  for (std::size_t j = 0; j <= n; ++j) {
    m[n + j][2 * n + 2 * j] = 1;
    m[n + j][2 * n + 2 * j + 1] = -1;
  }
  Embedding e(h, GroupDescriptor::SU(big), std::move(m), "h2");
  std::vector<Weight> expected;
  for (std::size_t i = 0; i < h.coords(); ++i)
    for (int s : {1, -1}) expected.push_back(signedUnit(h.coords(), i, s));
  checkDefiningRestriction(e, expected);
  return e;
}

Embedding Embedding::identity(const GroupDescriptor& g) {
  Matrix m(g.coords(), std::vector<std::int64_t>(g.coords(), 0));
  for (std::size_t i = 0; i < g.coords(); ++i) m[i][i] = 1;
  // SU rows must kill (1,...,1): use the centered-free form e_i − e_last.
  for (std::size_t k = 0; k < g.factors().size(); ++k) {
    if (g.factors()[k].kind != FactorKind::SU) continue;
    const std::size_t last = g.offset(k) + g.factors()[k].coords() - 1;
    for (std::size_t i = g.offset(k); i <= last; ++i) m[i][last] -= 1;
  }
  return Embedding(g, g, std::move(m), "identity");
}

Embedding Embedding::trivialSubgroup(const GroupDescriptor& g) {
  return Embedding(GroupDescriptor::trivial(), g, Matrix{}, "trivial");
}

Weight Embedding::restrict(const Weight& w) const {
  requireSameRank(w, Weight(target_.coords()));
  std::vector<std::int64_t> twice(source_.coords(), 0);
  for (std::size_t r = 0; r < map_.size(); ++r)
    for (std::size_t c = 0; c < map_[r].size(); ++c) twice[r] += map_[r][c] * w.doubled(c);
  return source_.normalize(Weight::fromDoubled(std::move(twice)));
}

std::vector<Weight> definingWeights(const GroupDescriptor& g) {
  std::vector<Weight> out;
  for (std::size_t k = 0; k < g.factors().size(); ++k) {
    const auto& f = g.factors()[k];
    for (std::size_t i = 0; i < f.coords(); ++i) {
      out.push_back(g.normalize(signedUnit(g.coords(), g.offset(k) + i, 1)));
      if (f.kind != FactorKind::SU && f.kind != FactorKind::U)
        out.push_back(signedUnit(g.coords(), g.offset(k) + i, -1));
    }
    if (f.kind == FactorKind::SOOdd) out.push_back(Weight(g.coords()));
  }
  return out;
}

FormalCharacter restrictCharacter(const Embedding& e, const WeightMultiplicityTable& t) {
  if (!(t.group == e.target()))
    throw std::invalid_argument("restrictCharacter: table belongs to " + t.group.name() + ", embedding target is " +
                                e.target().name());
  FormalCharacter out(e.source().coords());
  for (const auto& [w, m] : t.multiplicities) out.add(e.restrict(w), m);
  return out;
}

Decomposition decompose(const GroupDescriptor& h, const FormalCharacter& c) {
  if (c.rank() != h.coords()) throw std::invalid_argument("decompose: character rank does not match " + h.name());
  std::map<Weight, std::int64_t> all;
  for (const auto& [w, q] : c.terms()) {
    if (!isInteger(q)) throw std::domain_error("decompose: non-integral multiplicity at " + w.toString());
    if (!w.isIntegral()) throw std::domain_error("decompose: half-integral weight " + w.toString());
    all[h.normalize(w)] += toInt64(q);
  }
  std::erase_if(all, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [w, m] : all)
    for (const auto& img : h.generatorImages(w)) {
      auto it = all.find(img);
      if (it == all.end() || it->second != m)
        throw std::domain_error("decompose: character is not Weyl-invariant for " + h.name() + " at " + w.toString());
    }

  std::map<Weight, std::int64_t> remaining;
  for (const auto& [w, m] : all)
    if (h.isDominant(w)) remaining.emplace(w, m);

  Decomposition out;
  while (!remaining.empty()) {
    auto top = remaining.begin();
    Rational topHeight = h.height(top->first);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      Rational ht = h.height(it->first);
      if (ht > topHeight || (ht == topHeight && it->first > top->first)) {
        top = it;
        topHeight = std::move(ht);
      }
    }
    const std::int64_t mult = top->second;
    const Weight hw = top->first;
    if (mult < 0)
      throw std::domain_error("not a character under current conventions: negative multiplicity at " + hw.toString());
    for (const auto& [mu, m] : *cachedDominant(h, hw)) {
      std::int64_t& slot = remaining[mu];
      slot -= mult * m;
      if (slot < 0)
        throw std::domain_error("not a character under current conventions: negative multiplicity at " +
                                mu.toString() + " after removing " + hw.toString());
      if (slot == 0) remaining.erase(mu);
    }
    out[HighestWeight(h, hw)] += mult;
  }
  return out;
}

Decomposition branchingRule(const Embedding& e, const HighestWeight& rho) {
  return decompose(e.source(), restrictCharacter(e, weightMultiplicities(e.target(), rho)));
}

std::int64_t branchMultiplicity(const Embedding& e, const HighestWeight& rho, const HighestWeight& tau) {
  requireHighestWeight(e.source(), tau);
  const auto d = branchingRule(e, rho);
  auto it = d.find(tau);
  return it == d.end() ? 0 : it->second;
}

std::map<HighestWeight, std::int64_t> tauDimensionDatum(const Embedding& e, const HighestWeight& tau,
                                                        const std::vector<HighestWeight>& rhos) {
  std::map<HighestWeight, std::int64_t> out;
  for (const auto& rho : rhos) out[rho] = branchMultiplicity(e, rho, tau);
  return out;
}

}  // namespace dimdatum
