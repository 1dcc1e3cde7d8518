#include "dimdatum/spectra.hpp"

#include "dimdatum/parallel.hpp"
#include "dimdatum/polyencode.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dimdatum {

CasimirForm CasimirForm::traceForm(const GroupDescriptor& g) {
  return CasimirForm{std::vector<Rational>(g.factors().size(), Rational(1))};
}

Rational CasimirForm::scale(std::size_t factor) const {
  return factor < factorScale.size() ? factorScale[factor] : Rational(1);
}

MetricScaling::MetricScaling(std::vector<Rational> a) : factors(std::move(a)) {
  for (const auto& x : factors)
    if (x <= 0) throw std::invalid_argument("metric scaling factors must be positive, got " + toFractionString(x));
}

MetricScaling MetricScaling::uniform(const GroupDescriptor& g, const Rational& a) {
  return MetricScaling(std::vector<Rational>(g.factors().size(), a));
}

CasimirForm MetricScaling::inverseForm() const {
  CasimirForm f;
  for (const auto& a : factors) f.factorScale.push_back(1 / a);
  return f;
}

namespace {

Rational factorCasimir(const GroupDescriptor& g, std::size_t k, const Weight& lambda) {
  const Weight shifted = lambda + g.delta().scaled(2);
  return g.innerOnFactor(k, lambda, shifted);
}

// Dominant weights of one factor (embedded in the full coordinate space) whose
// scaled Casimir value is at most `cutoff`.
std::vector<Weight> factorCandidates(const GroupDescriptor& g, std::size_t k, const Rational& scale,
                                     const Rational& cutoff, std::int64_t radiusScale) {
  const auto& f = g.factors()[k];
  // (λ,λ) ≤ (λ,λ+2δ) for dominant λ; on an SU block normalized to last entry 0
  // the centered norm is at least k_1²/2.
  const Rational normBound = cutoff / scale;
  const double limit = std::sqrt(2.0 * normBound.get_d()) + 1.0;
  const std::int64_t radius = static_cast<std::int64_t>(std::floor(limit)) * std::max<std::int64_t>(1, radiusScale);
  std::vector<Weight> local;
  switch (f.kind) {
    case FactorKind::SU:
      for (const auto& w : sortedWeights(f.coords() - 1, 0, radius)) {
        auto c = w.integralCoords();
        c.push_back(0);
        local.push_back(Weight::integral(c));
      }
      break;
    case FactorKind::U:
    case FactorKind::SOEven: local = sortedWeights(f.coords(), -radius, radius); break;
    case FactorKind::Sp:
    case FactorKind::SOOdd: local = sortedWeights(f.coords(), 0, radius); break;
  }
  std::vector<Weight> out;
  for (const auto& l : local) {
    Weight full(g.coords());
    for (std::size_t i = 0; i < l.rank(); ++i) full.setDoubled(g.offset(k) + i, l.doubled(i));
    if (!g.isDominant(full)) continue;
    if (scale * factorCasimir(g, k, full) <= cutoff) out.push_back(std::move(full));
  }
  return out;
}

std::int64_t lineSum(const std::vector<SpectrumLine>& lines) {
  std::int64_t s = 0;
  for (const auto& l : lines) s += l.multiplicity;
  return s;
}

}  // namespace

Rational casimirEigenvalue(const GroupDescriptor& g, const HighestWeight& rho, const CasimirForm& form) {
  if (rho.weight().rank() != g.coords() || !g.isDominant(rho.weight()))
    throw std::invalid_argument("casimirEigenvalue: not a highest weight of " + g.name());
  Rational total = 0;
  for (std::size_t k = 0; k < g.factors().size(); ++k) total += form.scale(k) * factorCasimir(g, k, rho.weight());
  return total;
}

std::vector<HighestWeight> enumerateIrreps(const GroupDescriptor& g, const CasimirForm& form, const Rational& cutoff,
                                           EnumerationOptions opts) {
  if (cutoff < 0) throw std::invalid_argument("enumerateIrreps: cutoff must be non-negative");
  for (std::size_t k = 0; k < g.factors().size(); ++k)
    if (form.scale(k) <= 0) throw std::invalid_argument("enumerateIrreps: form scales must be positive");
  std::vector<Weight> partial{Weight(g.coords())};
  for (std::size_t k = 0; k < g.factors().size(); ++k) {
    const auto candidates = factorCandidates(g, k, form.scale(k), cutoff, opts.radiusScale);
    std::vector<Weight> next;
    for (const auto& p : partial)
      for (const auto& c : candidates) next.push_back(p + c);
    partial = std::move(next);
  }
  std::vector<std::pair<Rational, HighestWeight>> keyed;
  for (const auto& w : partial) {
    HighestWeight hw(g, w);
    Rational value = casimirEigenvalue(g, hw, form);
    if (value <= cutoff) keyed.emplace_back(std::move(value), std::move(hw));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<HighestWeight> out;
  for (auto& [v, hw] : keyed) out.push_back(std::move(hw));
  return out;
}

std::int64_t Spectrum::totalMultiplicity() const { return lineSum(lines); }

std::string Spectrum::toCsv() const {
  std::ostringstream os;
  for (const auto& l : lines)
    os << l.eigenvalue.get_num().get_str() << ',' << l.eigenvalue.get_den().get_str() << ',' << l.multiplicity << '\n';
  return os.str();
}

BundleSpectrumResult bundleSpectrumDetailed(const BundleSpec& b, const CasimirForm& form, const Rational& cutoff,
                                            EnumerationOptions opts) {
  const auto& e = b.embedding;
  if (b.tau.weight().rank() != e.source().coords() || !e.source().isDominant(b.tau.weight()))
    throw std::invalid_argument("bundleSpectrum: tau is not a highest weight of " + e.source().name());
  const auto rhos = enumerateIrreps(e.target(), form, cutoff, opts);
  std::vector<SpectrumContribution> all(rhos.size());
  parallelFor(rhos.size(), [&](std::size_t i) {
    const auto decomposition = branchingRule(e, rhos[i]);
    auto it = decomposition.find(b.tau);
    all[i] = SpectrumContribution{rhos[i], casimirEigenvalue(e.target(), rhos[i], form),
                                  it == decomposition.end() ? 0 : it->second, weylDimension(e.target(), rhos[i])};
  });
  BundleSpectrumResult result;
  result.irrepsExamined = rhos.size();
  result.spectrum.cutoff = cutoff;
  std::map<Rational, std::int64_t> merged;
  for (auto& c : all) {
    if (c.branching == 0) continue;
    merged[c.eigenvalue] += c.branching * c.dimension;
    result.contributions.push_back(std::move(c));
  }
  for (auto& [v, m] : merged) result.spectrum.lines.push_back({v, m});
  return result;
}

Spectrum bundleSpectrum(const BundleSpec& b, const CasimirForm& form, const Rational& cutoff, EnumerationOptions opts) {
  return bundleSpectrumDetailed(b, form, cutoff, opts).spectrum;
}

Spectrum scaledProductSpectrum(const Embedding& e, const HighestWeight& tau, const MetricScaling& scaling,
                               const Rational& cutoff, EnumerationOptions opts) {
  if (!e.target().isSemisimple())
    throw std::invalid_argument("scaledProductSpectrum: " + e.target().name() + " is not semisimple");
  if (scaling.factors.size() != e.target().factors().size())
    throw std::invalid_argument("scaledProductSpectrum: need one scaling factor per simple factor of " +
                                e.target().name());
  return bundleSpectrum(BundleSpec{e, tau}, scaling.inverseForm(), cutoff, opts);
}

SpectrumComparison compareSpectra(const Spectrum& a, const Spectrum& b) {
  if (a.cutoff != b.cutoff)
    throw std::invalid_argument("compareSpectra: cutoffs differ (" + toFractionString(a.cutoff) + " vs " +
                                toFractionString(b.cutoff) + ")");
  std::map<Rational, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& l : a.lines) merged[l.eigenvalue].first += l.multiplicity;
  for (const auto& l : b.lines) merged[l.eigenvalue].second += l.multiplicity;
  for (const auto& [v, m] : merged)
    if (m.first != m.second) return SpectrumComparison{false, SpectrumDifference{v, m.first, m.second}};
  return SpectrumComparison{true, std::nullopt};
}

}  // namespace dimdatum
