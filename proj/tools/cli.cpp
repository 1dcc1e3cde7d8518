#include "cli.hpp"

#include "dimdatum/parallel.hpp"
#include "dimdatum/polyencode.hpp"
#include "dimdatum/rational.hpp"
#include "dimdatum/reps.hpp"
#include "dimdatum/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dimdatum::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parseInt(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::int64_t> parseIntList(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split(s, ',')) out.push_back(parseInt(tok));
  return out;
}

Rational parseRationalArg(const std::string& s, const char* what) {
  try {
    return parseRational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + ": '" + s + "'");
  }
}

GroupDescriptor parseGroup(const std::string& s) {
  try {
    return GroupDescriptor::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("unknown group '") + s + "': " + e.what());
  }
}

/// Highest weight in the CLI syntax: "trivial", "std", "dual", or
/// comma-separated integers with ';' between factors.
HighestWeight parseHighest(const GroupDescriptor& g, const std::string& s) {
  try {
    if (s == "trivial" || s.empty()) return HighestWeight::trivial(g);
    if (s == "std" || s == "dual") {
      if (g.factors().size() != 1) throw UsageError("'" + s + "' needs a single-factor group");
      std::vector<std::int64_t> v(g.coords(), 0);
      if (s == "std") {
        v.front() = 1;
      } else {
        const auto kind = g.factors().front().kind;
        if (kind != FactorKind::SU && kind != FactorKind::U) return parseHighest(g, "std");
        v.back() = -1;
      }
      return HighestWeight(g, Weight::integral(v));
    }
    const auto blocks = split(s, ';');
    std::vector<std::vector<std::int64_t>> parts;
    for (const auto& b : blocks) parts.push_back(parseIntList(b));
    if (parts.size() == 1 && g.factors().size() != 1) {
      if (parts.front().size() != g.coords()) throw UsageError("weight '" + s + "' has the wrong length");
      return HighestWeight(g, Weight::integral(parts.front()));
    }
    if (parts.size() != g.factors().size()) throw UsageError("weight '" + s + "' has the wrong number of factors");
    for (std::size_t f = 0; f < parts.size(); ++f)
      if (parts[f].size() != g.factors()[f].coords())
        throw UsageError("weight '" + s + "' has the wrong length in factor " + std::to_string(f + 1));
    return HighestWeight::fromParts(g, parts);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("invalid weight '" + s + "' for " + g.name() + ": " + e.what());
  }
}

Json intArray(const Weight& w) {
  Json a = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w.at(i));
  return a;
}

Json configJson(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  auto opt = [&j](const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  opt("n", c.n);
  opt("m", c.m);
  opt("bound", c.bound);
  opt("cutoff", c.cutoff);
  opt("group", c.group);
  opt("subgroup", c.subgroup);
  opt("rho", c.rho);
  opt("tau", c.tau);
  opt("lambda", c.lambda);
  opt("scaling", c.scaling);
  if (c.command == "compare-bundles") j["mismatch"] = c.mismatch;
  j["format"] = c.format;
  j["out"] = c.out;
  return j;
}

Json envelope(const RunConfig& c) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = configJson(c);
  return j;
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

void requireFormat(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw UsageError("format '" + c.format + "' is not supported by " + c.command);
}

long requireLong(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

Rational requireCutoff(const RunConfig& c) {
  if (!c.cutoff) throw UsageError("missing --cutoff");
  const Rational q = parseRationalArg(*c.cutoff, "cutoff");
  if (q < 0) throw UsageError("cutoff must be non-negative");
  return q;
}

Json spectrumJson(const Spectrum& s) {
  Json lines = Json::array();
  for (const auto& l : s.lines)
    lines.push_back({{"eigenvalue", toFractionString(l.eigenvalue)}, {"multiplicity", l.multiplicity}});
  return lines;
}

Json comparisonJson(const SpectrumComparison& cmp) {
  Json j;
  j["equal"] = cmp.equal;
  if (cmp.firstDifference) {
    j["first_difference"] = {{"eigenvalue", toFractionString(cmp.firstDifference->eigenvalue)},
                             {"first", cmp.firstDifference->first},
                             {"second", cmp.firstDifference->second}};
  } else {
    j["first_difference"] = nullptr;
  }
  return j;
}

}  // namespace

int cmdVerifyLemma(const RunConfig& cfg, std::string& report) {
  const long n = requireLong(cfg.n, "n");
  const long bound = requireLong(cfg.bound, "bound");
  if (n < 1 || n > 6) throw UsageError("--n must lie in 1..6");
  if (bound < 0) throw UsageError("--bound must be non-negative");
  requireFormat(cfg, {"json", "text"});

  const auto lambdas = sortedWeights(static_cast<std::size_t>(n), -bound, bound);
  std::vector<LemmaReport> results(lambdas.size());
  parallelFor(lambdas.size(), [&](std::size_t i) { results[i] = verifyLemma(static_cast<std::size_t>(n), lambdas[i]); });

  std::size_t identities = 0, failures = 0;
  std::map<std::string, std::size_t> perKind;
  for (const auto& r : results)
    for (const auto& id : r.identities) {
      ++identities;
      ++perKind[id.identity];
      if (!id.pass) ++failures;
    }
  const int code = failures == 0 ? kPass : kMismatch;

  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : results)
      for (const auto& id : r.identities)
        os << (id.pass ? "PASS " : "FAIL ") << id.identity << " n=" << n << " lambda=" << r.lambda.toString()
           << (id.pass ? "" : " diff=" + id.diff.toString()) << "\n";
    os << "instances=" << results.size() << " identities=" << identities << " failures=" << failures << "\n";
    report = os.str();
    return code;
  }

  Json j = envelope(cfg);
  Json inst = Json::array();
  for (const auto& r : results)
    for (const auto& id : r.identities)
      inst.push_back({{"kind", id.identity},
                      {"n", n},
                      {"lambda", intArray(r.lambda)},
                      {"pass", id.pass},
                      {"lhs", id.lhs.toString()},
                      {"rhs", id.rhs.toString()},
                      {"diff", id.diff.toString()},
                      {"provenance", {{"lhs", id.lhsRoute}, {"rhs", id.rhsRoute}}}});
  j["instances"] = std::move(inst);
  Json kinds;
  for (const auto& [k, c] : perKind) kinds[k] = c;
  j["summary"] = {{"weights", results.size()},
                  {"identities", identities},
                  {"per_kind", kinds},
                  {"failures", failures},
                  {"pass", failures == 0}};
  report = dumpJson(j);
  return code;
}

int cmdVerifyProp(const RunConfig& cfg, std::string& report) {
  const long m = requireLong(cfg.m, "m");
  const long bound = requireLong(cfg.bound, "bound");
  if (m < 1 || m > 3) throw UsageError("--m must lie in 1..3");
  if (bound < 0) throw UsageError("--bound must be non-negative");
  requireFormat(cfg, {"json", "text"});

  std::vector<Weight> lambdas;
  for (bool odd : {false, true})
    for (auto& w : constrainedWeights(static_cast<std::size_t>(m), odd, bound)) lambdas.push_back(std::move(w));
  std::vector<PropReport> results(lambdas.size());
  parallelFor(lambdas.size(), [&](std::size_t i) { results[i] = verifyProp(static_cast<std::size_t>(m), lambdas[i]); });

  std::size_t failures = 0, middleCases = 0, middleFailures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    if (r.middle && *r.middle != 0) {
      ++middleCases;
      if (!r.pass) ++middleFailures;
    }
  }
  const int code = failures == 0 ? kPass : kMismatch;

  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : results)
      os << (r.pass ? "PASS " : "FAIL ") << (r.odd ? "odd" : "even") << " m=" << m << " lambda=" << r.lambda.toString()
         << " lambda1=" << r.lambda1.toString() << " lambda2=" << r.lambda2.toString() << "\n";
    os << "instances=" << results.size() << " failures=" << failures << " nonzero_middle=" << middleCases
       << " nonzero_middle_failures=" << middleFailures << "\n";
    report = os.str();
    return code;
  }

  Json j = envelope(cfg);
  Json inst = Json::array();
  for (const auto& r : results) {
    Json e = {{"kind", r.odd ? "odd" : "even"},
              {"m", m},
              {"n", r.lambda.rank()},
              {"lambda", intArray(r.lambda)},
              {"lambda1", intArray(r.lambda1)},
              {"lambda2", intArray(r.lambda2)},
              {"middle", r.middle ? Json(*r.middle) : Json(nullptr)},
              {"pass", r.pass},
              {"lhs", r.lhs.toString()},
              {"rhs", r.rhs.toString()},
              {"diff", r.diff.toString()}};
    e["provenance"] = {{"lhs", r.odd ? "a_{2m+1}: S_{2m+1} average, encoded" : "a_{2m}: S_{2m} average, encoded"},
                       {"rhs", r.odd ? "c_m(lambda1) * d_{m+1}(lambda2): W_m and D_{m+1} averages, encoded"
                                     : "b_m(lambda1) * b'_m(lambda2): W_m averages, encoded"}};
    inst.push_back(std::move(e));
  }
  j["instances"] = std::move(inst);
  j["summary"] = {{"instances", results.size()}, {"failures", failures}, {"pass", failures == 0}};
  j["middle_coordinate"] = {{"nonzero_instances", middleCases},
                            {"failures", middleFailures},
                            {"holds", middleFailures == 0}};
  report = dumpJson(j);
  return code;
}

namespace {

Embedding subgroupFor(const GroupDescriptor& g, const std::optional<std::string>& sub) {
  if (!sub || *sub == "full") return Embedding::identity(g);
  if (*sub == "trivial") return Embedding::trivialSubgroup(g);
  if (*sub == "h1" || *sub == "h2") {
    if (g.factors().size() != 1 || g.factors().front().kind != FactorKind::SU || g.coords() < 6 ||
        (g.coords() - 2) % 4 != 0)
      throw UsageError("subgroup " + *sub + " needs G = su(4n+2) with n >= 1");
    const std::size_t n = (g.coords() - 2) / 4;
    return *sub == "h1" ? Embedding::h1(n) : Embedding::h2(n);
  }
  throw UsageError("unknown subgroup '" + *sub + "' (expected h1, h2 or trivial)");
}

}  // namespace

int cmdBranch(const RunConfig& cfg, std::string& report) {
  if (!cfg.group) throw UsageError("missing --group");
  requireFormat(cfg, {"json", "text"});
  const GroupDescriptor g = parseGroup(*cfg.group);
  const Embedding e = subgroupFor(g, cfg.subgroup);
  const HighestWeight rho = parseHighest(g, cfg.rho.value_or("trivial"));
  const HighestWeight tau = parseHighest(e.source(), cfg.tau.value_or("trivial"));
  const std::int64_t mult = branchMultiplicity(e, rho, tau);

  if (cfg.format == "text") {
    report = std::to_string(mult) + "\n";
    return kPass;
  }
  Json j = envelope(cfg);
  j["group"] = g.name();
  j["subgroup"] = e.source().name();
  j["rho"] = rho.toString(g);
  j["tau"] = tau.toString(e.source());
  j["multiplicity"] = mult;
  j["dimension_rho"] = weylDimension(g, rho);
  j["provenance"] = "Freudenthal table of rho restricted to the subgroup torus, then highest-weight peeling";
  report = dumpJson(j);
  return kPass;
}

int cmdCompareBundles(const RunConfig& cfg, std::string& report) {
  const long n = requireLong(cfg.n, "n");
  if (n < 1) throw UsageError("--n must be at least 1");
  if (!cfg.lambda) throw UsageError("missing --lambda");
  const Rational cutoff = requireCutoff(cfg);
  requireFormat(cfg, {"json", "text"});

  const auto k = parseIntList(*cfg.lambda);
  const std::size_t len = 2 * static_cast<std::size_t>(n) + 1;
  if (k.size() != len) throw UsageError("--lambda must have 2n+1 entries");
  for (std::size_t i = 0; i + 1 < len; ++i)
    if (k[i] < k[i + 1]) throw UsageError("--lambda must be non-increasing");
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    if (k[i] + k[len - 1 - i] != 0) throw UsageError("--lambda must satisfy k_i + k_{2n+2-i} = 0");

  const std::size_t nn = static_cast<std::size_t>(n);
  const Embedding e1 = Embedding::h1(nn);
  const Embedding e2 = Embedding::h2(nn);
  std::vector<std::int64_t> k1(k.begin(), k.begin() + n);
  std::vector<std::int64_t> k2(k.begin(), k.begin() + n + 1);
  std::vector<std::int64_t> tau1 = k;
  if (cfg.mismatch) tau1.front() += 1;

  HighestWeight t1, t2;
  try {
    t1 = HighestWeight(e1.source(), Weight::integral(tau1));
    t2 = HighestWeight::fromParts(e2.source(), {k1, k2});
  } catch (const std::exception& ex) {
    throw UsageError(std::string("--lambda gives no admissible pair: ") + ex.what());
  }

  const CasimirForm form = CasimirForm::traceForm(e1.target());
  const auto r1 = bundleSpectrumDetailed({e1, t1}, form, cutoff);
  const auto r2 = bundleSpectrumDetailed({e2, t2}, form, cutoff);
  const auto cmp = compareSpectra(r1.spectrum, r2.spectrum);
  const int code = cmp.equal ? kPass : kMismatch;

  if (cfg.format == "text") {
    std::ostringstream os;
    os << "h1 tau=" << t1.toString(e1.source()) << "\n" << r1.spectrum.toCsv();
    os << "h2 tau=" << t2.toString(e2.source()) << "\n" << r2.spectrum.toCsv();
    os << (cmp.equal ? "equal" : "different");
    if (cmp.firstDifference)
      os << " at " << toFractionString(cmp.firstDifference->eigenvalue) << " (" << cmp.firstDifference->first
         << " vs " << cmp.firstDifference->second << ")";
    os << "\n";
    report = os.str();
    return code;
  }

  auto side = [](const Embedding& e, const HighestWeight& t, const BundleSpectrumResult& r) {
    Json s;
    s["subgroup"] = e.source().name();
    s["tau"] = t.toString(e.source());
    s["irreps_examined"] = r.irrepsExamined;
    Json contrib = Json::array();
    for (const auto& c : r.contributions)
      contrib.push_back({{"rho", c.rho.toString(e.target())},
                         {"eigenvalue", toFractionString(c.eigenvalue)},
                         {"branching", c.branching},
                         {"dimension", c.dimension}});
    s["contributions"] = std::move(contrib);
    s["spectrum"] = spectrumJson(r.spectrum);
    return s;
  };
  Json j = envelope(cfg);
  j["group"] = e1.target().name();
  j["h1"] = side(e1, t1, r1);
  j["h2"] = side(e2, t2, r2);
  j["comparison"] = comparisonJson(cmp);
  j["provenance"] = "trace-form Casimir over enumerated irreps; multiplicity = branching times dimension";
  report = dumpJson(j);
  return code;
}

int cmdSpectrum(const RunConfig& cfg, std::string& report) {
  if (!cfg.group) throw UsageError("missing --group");
  const Rational cutoff = requireCutoff(cfg);
  requireFormat(cfg, {"csv", "json", "text"});
  const GroupDescriptor g = parseGroup(*cfg.group);
  const Embedding e = subgroupFor(g, cfg.subgroup);
  const HighestWeight tau = parseHighest(e.source(), cfg.tau.value_or("trivial"));

  Spectrum s;
  if (cfg.scaling) {
    std::vector<Rational> a;
    for (const auto& tok : split(*cfg.scaling, ',')) a.push_back(parseRationalArg(tok, "scaling"));
    if (a.size() != g.factors().size()) throw UsageError("--scaling needs one value per factor");
    for (const auto& x : a)
      if (x <= 0) throw UsageError("--scaling values must be positive");
    if (!g.isSemisimple()) throw UsageError("--scaling needs a semisimple group");
    s = scaledProductSpectrum(e, tau, MetricScaling(a), cutoff);
  } else {
    s = bundleSpectrum({e, tau}, CasimirForm::traceForm(g), cutoff);
  }

  if (cfg.format == "json") {
    Json j = envelope(cfg);
    j["group"] = g.name();
    j["subgroup"] = e.source().name();
    j["tau"] = tau.toString(e.source());
    j["spectrum"] = spectrumJson(s);
    j["total_multiplicity"] = s.totalMultiplicity();
    j["provenance"] = "sum over factors of (1/a_i) (lambda_i, lambda_i + 2 delta_i); multiplicity = branching times dimension";
    report = dumpJson(j);
  } else {
    report = s.toCsv();
  }
  return kPass;
}

int run(const RunConfig& given, std::ostream& out, std::ostream& err) {
  RunConfig cfg = given;
  if (cfg.format.empty()) cfg.format = cfg.command == "spectrum" ? "csv" : "json";
  std::string report;
  int code = kPass;
  try {
    if (cfg.command == "verify-lemma") code = cmdVerifyLemma(cfg, report);
    else if (cfg.command == "verify-prop") code = cmdVerifyProp(cfg, report);
    else if (cfg.command == "branch") code = cmdBranch(cfg, report);
    else if (cfg.command == "compare-bundles") code = cmdCompareBundles(cfg, report);
    else if (cfg.command == "spectrum") code = cmdSpectrum(cfg, report);
    else throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.out.empty()) {
    out << report;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << report;
  }
  return code;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of tau-dimension data, structured determinant identities and bundle spectra"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  long n = 0, m = 0, bound = 0;
  std::string cutoff, group, subgroup, tau, rho, lambda, scaling;

  auto withOutput = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text");
    sub->add_option("--out", cfg.out, "report path (default stdout)");
  };

  auto* lemma = app.add_subcommand("verify-lemma", "Sweep the determinant identities");
  lemma->add_option("--n", n)->required();
  lemma->add_option("--bound", bound)->required();
  withOutput(lemma);

  auto* prop = app.add_subcommand("verify-prop", "Sweep the factorization identities");
  prop->add_option("--m", m)->required();
  prop->add_option("--bound", bound)->required();
  withOutput(prop);

  auto* branch = app.add_subcommand("branch", "dim Hom_H(tau, rho|_H)");
  branch->add_option("--group", group)->required();
  branch->add_option("--subgroup", subgroup)->required();
  branch->add_option("--rho", rho);
  branch->add_option("--tau", tau);
  withOutput(branch);

  auto* compare = app.add_subcommand("compare-bundles", "Compare the two bundle spectra on SU(4n+2)");
  compare->add_option("--n", n)->required();
  compare->add_option("--lambda", lambda)->required();
  compare->add_option("--cutoff", cutoff)->required();
  compare->add_flag("--mismatch", cfg.mismatch, "shift tau on the first subgroup");
  withOutput(compare);

  auto* spectrum = app.add_subcommand("spectrum", "Casimir spectrum of a homogeneous bundle");
  spectrum->add_option("--group", group)->required();
  spectrum->add_option("--subgroup", subgroup);
  spectrum->add_option("--tau", tau);
  spectrum->add_option("--scaling", scaling);
  spectrum->add_option("--cutoff", cutoff)->required();
  withOutput(spectrum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* used = app.get_subcommands().front();
  cfg.command = used->get_name();
  auto given = [used](const char* flag) { return used->get_option_no_throw(flag) && used->count(flag) > 0; };
  if (given("--n")) cfg.n = n;
  if (given("--m")) cfg.m = m;
  if (given("--bound")) cfg.bound = bound;
  if (given("--cutoff")) cfg.cutoff = cutoff;
  if (given("--group")) cfg.group = group;
  if (given("--subgroup")) cfg.subgroup = subgroup;
  if (given("--rho")) cfg.rho = rho;
  if (given("--tau")) cfg.tau = tau;
  if (given("--lambda")) cfg.lambda = lambda;
  if (given("--scaling")) cfg.scaling = scaling;
  return run(cfg, out, err);
}

}  // namespace dimdatum::cli
