#pragma once

#include "dimdatum/group.hpp"
#include "dimdatum/rational.hpp"
#include "dimdatum/reps.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimdatum {

/// Per-factor multiple of the trace form used to evaluate Casimir values.
/// The default (all ones) is the trace form itself.
struct CasimirForm {
  std::vector<Rational> factorScale;

  static CasimirForm traceForm(const GroupDescriptor& g);
  Rational scale(std::size_t factor) const;
};

/// Positive per-factor metric scalings a_i.
struct MetricScaling {
  std::vector<Rational> factors;

  /// Throws std::invalid_argument unless every a_i > 0.
  explicit MetricScaling(std::vector<Rational> a);
  static MetricScaling uniform(const GroupDescriptor& g, const Rational& a);
  /// The form with factor scales 1/a_i.
  CasimirForm inverseForm() const;
};

/// (λ, λ+2δ) summed over factors with the form's scales.
Rational casimirEigenvalue(const GroupDescriptor& g, const HighestWeight& rho, const CasimirForm& form);

struct EnumerationOptions {
  /// Multiplies the coordinate radius used for the lattice search.
  std::int64_t radiusScale = 1;
};

/// Every dominant ρ with casimirEigenvalue ≤ cutoff, sorted by (eigenvalue, weight).
std::vector<HighestWeight> enumerateIrreps(const GroupDescriptor& g, const CasimirForm& form, const Rational& cutoff,
                                           EnumerationOptions opts = {});

struct BundleSpec {
  Embedding embedding;
  HighestWeight tau;
};

struct SpectrumLine {
  Rational eigenvalue;
  std::int64_t multiplicity = 0;
  friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

struct Spectrum {
  std::vector<SpectrumLine> lines;  // strictly increasing eigenvalues, positive multiplicities
  Rational cutoff;

  std::int64_t totalMultiplicity() const;
  /// "eigenvalue_num,eigenvalue_den,multiplicity" per line, ascending, LF endings.
  std::string toCsv() const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// One ρ-isotypic piece of L²(G/H, E_τ).
struct SpectrumContribution {
  HighestWeight rho;
  Rational eigenvalue;
  std::int64_t branching = 0;  // dim Hom_H(τ, ρ|_H)
  std::int64_t dimension = 0;  // dim ρ
};

struct BundleSpectrumResult {
  Spectrum spectrum;
  std::vector<SpectrumContribution> contributions;  // only those with branching > 0
  std::size_t irrepsExamined = 0;
};

BundleSpectrumResult bundleSpectrumDetailed(const BundleSpec& b, const CasimirForm& form, const Rational& cutoff,
                                            EnumerationOptions opts = {});
Spectrum bundleSpectrum(const BundleSpec& b, const CasimirForm& form, const Rational& cutoff,
                        EnumerationOptions opts = {});

/// Spectrum with eigenvalue Σ_i (1/a_i) χ_i(ρ_i). G must be semisimple.
Spectrum scaledProductSpectrum(const Embedding& e, const HighestWeight& tau, const MetricScaling& scaling,
                               const Rational& cutoff, EnumerationOptions opts = {});

struct SpectrumDifference {
  Rational eigenvalue;
  std::int64_t first = 0;
  std::int64_t second = 0;
};

struct SpectrumComparison {
  bool equal = true;
  std::optional<SpectrumDifference> firstDifference;
};

/// Exact multiset comparison; reports the smallest eigenvalue whose
/// multiplicities differ. Throws std::invalid_argument on a cutoff mismatch.
SpectrumComparison compareSpectra(const Spectrum& a, const Spectrum& b);

}  // namespace dimdatum
