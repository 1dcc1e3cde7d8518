// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "dimdatum/character.hpp"
#include "dimdatum/parallel.hpp"
#include "dimdatum/polyencode.hpp"
#include "dimdatum/reps.hpp"
#include "dimdatum/root_system.hpp"
#include "dimdatum/spectra.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace dimdatum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

// Tables built while checking branchings; criterion 4 audits their masses.
struct Ledger {
  std::vector<std::pair<GroupDescriptor, HighestWeight>> tables;
  std::vector<std::tuple<Embedding, HighestWeight, Decomposition>> branchings;
  bool middleAdmitted = false;
};

Ledger ledger;

Outcome lemmaSweep() {
  std::vector<std::pair<std::size_t, Weight>> jobs;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : sortedWeights(n, 0, 3)) jobs.emplace_back(n, w);
    for (const auto& w : sortedWeights(n, -2, 2))
      if (w.at(n - 1) < 0) jobs.emplace_back(n, w);
  }
  std::vector<LemmaReport> reports(jobs.size());
  parallelFor(jobs.size(), [&](std::size_t i) { reports[i] = verifyLemma(jobs[i].first, jobs[i].second); });

  Outcome o;
  std::size_t identities = 0, full = 0;
  std::string firstFailure;
  for (const auto& r : reports) {
    identities += r.identities.size();
    if (r.identities.size() == 6) ++full;
    for (const auto& id : r.identities)
      if (!id.pass && firstFailure.empty())
        firstFailure = id.identity + " n=" + std::to_string(r.n) + " lambda=" + r.lambda.toString();
    if (r.lambda.at(r.n - 1) >= 0 && r.identities.size() != 6) {
      o.pass = false;
      if (firstFailure.empty()) firstFailure = "missing identities at " + r.lambda.toString();
    }
  }
  o.pass = o.pass && firstFailure.empty();
  std::ostringstream os;
  os << reports.size() << " weights, " << identities << " identities (" << full << " with all six kinds)";
  if (!firstFailure.empty()) os << "; first failure " << firstFailure;
  o.detail = os.str();
  return o;
}

Outcome propSweep() {
  std::vector<std::pair<std::size_t, Weight>> jobs;
  for (std::size_t m = 1; m <= 2; ++m)
    for (bool odd : {false, true})
      for (const auto& w : constrainedWeights(m, odd, 2)) jobs.emplace_back(m, w);
  std::vector<PropReport> reports(jobs.size());
  parallelFor(jobs.size(), [&](std::size_t i) { reports[i] = verifyProp(jobs[i].first, jobs[i].second); });

  std::size_t even = 0, odd = 0, middle = 0, middleFail = 0, fail = 0;
  for (const auto& r : reports) {
    (r.odd ? odd : even)++;
    if (!r.pass) ++fail;
    if (r.middle && *r.middle != 0) {
      ++middle;
      if (!r.pass) ++middleFail;
      if (r.m == 1 && r.lambda == Weight::integral({1, 1, -1}) && r.pass) ledger.middleAdmitted = true;
    }
  }
  Outcome o;
  o.pass = fail == 0 && even > 0 && odd > 0;
  std::ostringstream os;
  os << even << " even and " << odd << " odd instances, " << fail << " failures; nonzero middle coordinate: "
     << middle << " instances, " << middleFail << " failures (" << (middleFail == 0 ? "holds" : "does not hold")
     << ")";
  o.detail = os.str();
  return o;
}

Outcome isospectralPair() {
  const auto su6 = GroupDescriptor::SU(6);
  const auto form = CasimirForm::traceForm(su6);
  const Rational cutoff = 12;
  const auto e1 = Embedding::h1(1), e2 = Embedding::h2(1);
  const auto rhos = enumerateIrreps(su6, form, cutoff);

  auto has = [&](std::initializer_list<std::int64_t> w) {
    return std::count(rhos.begin(), rhos.end(), HighestWeight(su6, Weight::integral(w))) == 1;
  };
  Outcome o;
  if (!has({1, 0, 0, 0, 0, 0}) || !has({1, 1, 1, 1, 1, 0}) || !has({2, 1, 1, 1, 1, 0})) {
    o.pass = false;
    o.detail = "enumeration misses std, dual or adjoint; ";
  }

  std::vector<std::vector<std::int64_t>> family{{0, 0, 0}, {1, 0, -1}, {2, 0, -2}};
  if (ledger.middleAdmitted) family.push_back({1, 1, -1});

  // Branching of every ρ to both subgroups, once; τ-multiplicities are read off.
  std::vector<Decomposition> b1(rhos.size()), b2(rhos.size());
  parallelFor(rhos.size(), [&](std::size_t i) {
    b1[i] = branchingRule(e1, rhos[i]);
    b2[i] = branchingRule(e2, rhos[i]);
  });
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    ledger.tables.emplace_back(su6, rhos[i]);
    ledger.branchings.emplace_back(e1, rhos[i], b1[i]);
    ledger.branchings.emplace_back(e2, rhos[i], b2[i]);
  }
  auto lookup = [](const Decomposition& d, const HighestWeight& t) {
    auto it = d.find(t);
    return it == d.end() ? std::int64_t{0} : it->second;
  };

  std::size_t comparisons = 0, nonzero = 0;
  std::string failures;
  for (const auto& k : family) {
    const HighestWeight t1(e1.source(), Weight::integral(k));
    const auto t2 = HighestWeight::fromParts(e2.source(), {{k[0]}, {k[0], k[1]}});
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      const auto m1 = lookup(b1[i], t1), m2 = lookup(b2[i], t2);
      // The direct query must agree with the table lookup.
      if (m1 != branchMultiplicity(e1, rhos[i], t1) || m2 != branchMultiplicity(e2, rhos[i], t2))
        failures += " inconsistent query at " + rhos[i].toString(su6);
      ++comparisons;
      if (m1 > 0) ++nonzero;
      if (m1 != m2)
        failures += " lambda=" + Weight::integral(k).toString() + " rho=" + rhos[i].toString(su6) + " (" +
                    std::to_string(m1) + " vs " + std::to_string(m2) + ")";
    }
    const auto s1 = bundleSpectrum({e1, t1}, form, cutoff);
    const auto s2 = bundleSpectrum({e2, t2}, form, cutoff);
    if (!compareSpectra(s1, s2).equal) failures += " spectra differ at lambda=" + Weight::integral(k).toString();
  }
  o.pass = o.pass && failures.empty();
  std::ostringstream os;
  os << o.detail << rhos.size() << " irreps of SU(6) with Casimir <= 12, " << family.size()
     << " weights lambda" << (ledger.middleAdmitted ? " (including (1,1,-1))" : "") << ", " << comparisons
     << " branching comparisons (" << nonzero << " nonzero), spectra equal";
  if (!failures.empty()) os << "; failures:" << failures;
  o.detail = os.str();
  return o;
}

struct OracleCase {
  const char* name;
  oracle::Group g;
};

std::vector<oracle::Vec> dominantBox(const oracle::Group& g, std::int64_t r) {
  std::vector<oracle::Vec> out;
  oracle::Vec c(g.n, -r);
  const auto roots = oracle::positiveRoots(g);
  for (;;) {
    bool ok = g.type != oracle::Type::SU || c.back() == 0;
    for (const auto& a : roots) ok = ok && oracle::dot(c, a) >= 0;
    if (ok) out.push_back(c);
    std::size_t i = 0;
    while (i < g.n && c[i] == r) c[i++] = -r;
    if (i == g.n) return out;
    ++c[i];
  }
}

Outcome selfConsistency() {
  std::size_t tablesChecked = 0, oracleChecked = 0, roundTrips = 0, masses = 0;
  std::string failures;

  const std::vector<OracleCase> cases{{"su2", {oracle::Type::SU, 2}},     {"su3", {oracle::Type::SU, 3}},
                                      {"u2", {oracle::Type::U, 2}},       {"sp1", {oracle::Type::Sp, 1}},
                                      {"sp2", {oracle::Type::Sp, 2}},     {"so4", {oracle::Type::SOEven, 2}},
                                      {"so5", {oracle::Type::SOOdd, 2}},  {"so3", {oracle::Type::SOOdd, 1}}};
  for (const auto& c : cases) {
    const auto g = GroupDescriptor::parse(c.name);
    for (const auto& lam : dominantBox(c.g, 3)) {
      const HighestWeight h(g, Weight::integral(lam));
      const auto t = weightMultiplicities(g, h);
      std::map<Weight, std::int64_t> expect;
      for (const auto& [w, m] : oracle::character(c.g, lam)) expect[Weight::integral(w)] = m;
      ++oracleChecked;
      if (t.multiplicities != expect) failures += std::string(" oracle ") + c.name + h.toString(g);
      ledger.tables.emplace_back(g, h);
    }
  }

  for (const auto& [g, h] : ledger.tables) {
    ++tablesChecked;
    if (weightMultiplicities(g, h).totalMass() != weylDimension(g, h))
      failures += " mass " + g.name() + h.toString(g);
  }

  // 20 dominant weights drawn from several groups with a fixed seed.
  std::mt19937 rng(20261014);
  const std::vector<const char*> pool{"su3", "su4", "sp2", "so5", "so6", "u3", "sp1xso4", "su2xsu2"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  while (roundTrips < 20) {
    const auto g = GroupDescriptor::parse(pool[pick(rng)]);
    std::vector<std::int64_t> v(g.coords());
    for (auto& x : v) x = coord(rng);
    const Weight w = g.normalize(Weight::integral(v));
    if (!g.isDominant(w)) continue;
    const HighestWeight h(g, w);
    ++roundTrips;
    if (decompose(g, weylCharacter(g, h)) != Decomposition{{h, 1}}) failures += " round trip " + h.toString(g);
  }

  for (const auto& [e, rho, d] : ledger.branchings) {
    std::int64_t mass = 0;
    for (const auto& [tau, m] : d) mass += m * weylDimension(e.source(), tau);
    ++masses;
    if (mass != weylDimension(e.target(), rho)) failures += " frobenius " + e.name() + rho.toString(e.target());
  }

  Outcome o;
  o.pass = failures.empty() && masses > 0;
  std::ostringstream os;
  os << tablesChecked << " tables sum to their dimension, " << oracleChecked
     << " tables match the alternating-sum oracle, " << roundTrips << " decomposition round trips, " << masses
     << " branchings conserve dimension";
  if (!failures.empty()) os << "; failures:" << failures;
  o.detail = os.str();
  return o;
}

Outcome productFormula() {
  struct Case {
    const char* label;
    GroupDescriptor g;
    SubRootSystem phi;
  };
  const std::vector<Case> cases{{"A1 in Z^2", GroupDescriptor::U(2), SubRootSystem::typeA(2)},
                                {"A2 in Z^3", GroupDescriptor::U(3), SubRootSystem::typeA(3)},
                                {"B2", GroupDescriptor::SO(5), SubRootSystem::typeB(2)},
                                {"C2", GroupDescriptor::Sp(2), SubRootSystem::typeC(2)},
                                {"D2", GroupDescriptor::SO(4), SubRootSystem::typeD(2)}};
  std::size_t checked = 0;
  std::string failures;
  for (const auto& c : cases) {
    const auto fphi = weylProduct(c.phi);
    for (const auto& w : sortedWeights(c.g.coords(), -2, 2)) {
      if (!c.g.isDominant(w)) continue;
      ++checked;
      const auto lhs = multiply(fphi, weylCharacter(c.g, HighestWeight(c.g, w)));
      if (lhs != fPhiLambdaW(c.phi, w, c.phi.weylGroup())) failures += std::string(" ") + c.label + w.toString();
    }
  }
  Outcome o;
  o.pass = failures.empty() && checked > 0;
  o.detail = std::to_string(checked) + " dominant weights over A1, A2, B2, C2, D2";
  if (!failures.empty()) o.detail += "; failures:" + failures;
  return o;
}

Outcome spectralChecks() {
  const Rational cutoff = 20;
  std::size_t irreps = 0, spectra = 0;
  std::string failures;
  for (const char* name : {"su2", "su3", "su6"}) {
    const auto g = GroupDescriptor::parse(name);
    const auto form = CasimirForm::traceForm(g);
    const auto base = enumerateIrreps(g, form, cutoff);
    if (base != enumerateIrreps(g, form, cutoff, {2})) failures += std::string(" enumeration radius ") + name;
    for (const auto& rho : base) {
      ++irreps;
      const auto v = casimirEigenvalue(g, rho, form);
      if (v < 0 || (v == 0) != rho.isTrivial()) failures += " casimir " + rho.toString(g);
    }

    std::vector<Embedding> subs{Embedding::trivialSubgroup(g), Embedding::identity(g)};
    if (g.coords() == 6) {
      subs.push_back(Embedding::h1(1));
      subs.push_back(Embedding::h2(1));
    }
    for (const auto& e : subs) {
      const BundleSpec b{e, HighestWeight::trivial(e.source())};
      const auto s = bundleSpectrum(b, form, cutoff);
      ++spectra;
      if (s != bundleSpectrum(b, form, cutoff, {2})) failures += " completeness " + e.name();
      for (const Rational a : {makeRational(1, 2), Rational(2), makeRational(3, 5)}) {
        const auto scaled = scaledProductSpectrum(e, b.tau, MetricScaling::uniform(g, a), cutoff / a);
        const auto expected = bundleSpectrum(b, form, cutoff);
        bool same = scaled.lines.size() == expected.lines.size();
        for (std::size_t i = 0; same && i < expected.lines.size(); ++i)
          same = scaled.lines[i].eigenvalue == expected.lines[i].eigenvalue / a &&
                 scaled.lines[i].multiplicity == expected.lines[i].multiplicity;
        if (!same) failures += " scaling " + e.name() + " a=" + toFractionString(a);
      }
    }
  }
  Outcome o;
  o.pass = failures.empty();
  o.detail = std::to_string(irreps) + " irreps up to Casimir 20 over SU(2), SU(3), SU(6); " +
             std::to_string(spectra) + " spectra stable under radius doubling and uniform scaling";
  if (!failures.empty()) o.detail += "; failures:" + failures;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"determinant identities", lemmaSweep},
      {"factorization identities", propSweep},
      {"isospectral pair at n=1", isospectralPair},
      {"representation self-consistency", selfConsistency},
      {"Weyl product formula", productFormula},
      {"spectral invariants", spectralChecks},
  };
  bool all = true;
  int index = 0;
  for (const auto& [label, check] : criteria) {
    ++index;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%s, %.1fs)\n", index, o.pass ? "PASS" : "FAIL", label, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
