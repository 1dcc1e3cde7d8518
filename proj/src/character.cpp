#include "dimdatum/character.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dimdatum {

namespace {

void requireRank(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": rank mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

Rational orderOf(const WeylGroup& w) {
  return Rational(BigInt(std::to_string(w.order())));
}

}  // namespace

FormalCharacter FormalCharacter::monomial(const Weight& w, const Rational& coefficient) {
  FormalCharacter f(w.rank());
  f.add(w, coefficient);
  return f;
}

Rational FormalCharacter::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalCharacter::add(const Weight& w, const Rational& c) {
  requireRank(w.rank(), rank_, "FormalCharacter::add");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  requireRank(rank_, o.rank_, "FormalCharacter::+");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  requireRank(rank_, o.rank_, "FormalCharacter::-");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalCharacter& FormalCharacter::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

FormalCharacter FormalCharacter::transformed(const SignedPermutation& g) const {
  requireRank(g.rank(), rank_, "FormalCharacter::transformed");
  FormalCharacter out(rank_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(g.apply(w), c);
  return out;
}

bool FormalCharacter::isInvariantUnder(const WeylGroup& w) const {
  requireRank(w.rank(), rank_, "FormalCharacter::isInvariantUnder");
  Weight image(rank_);
  for (const auto& g : w.generators())
    for (const auto& [mu, c] : terms_) {
      g.applyInto(mu, image);
      auto it = terms_.find(image);
      if (it == terms_.end() || it->second != c) return false;
    }
  return true;
}

std::string FormalCharacter::toText() const {
  std::ostringstream os;
  for (const auto& [w, c] : terms_) os << toFractionString(c) << " : " << w.toString() << '\n';
  return os.str();
}

FormalCharacter multiply(const FormalCharacter& f, const FormalCharacter& g) {
  requireRank(f.rank(), g.rank(), "multiply");
  std::unordered_map<Weight, Rational, WeightHash> acc;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) acc[a + b] += ca * cb;
  FormalCharacter out(f.rank());
  for (auto& [w, c] : acc) out.add(w, c);
  return out;
}

std::set<Weight> orbit(const Weight& lambda, const WeylGroup& w) {
  requireRank(lambda.rank(), w.rank(), "orbit");
  std::set<Weight> out;
  Weight image(lambda.rank());
  w.forEach([&](const SignedPermutation& g) {
    g.applyInto(lambda, image);
    out.insert(image);
  });
  return out;
}

FormalCharacter averageOver(const FormalCharacter& f, const WeylGroup& w) {
  requireRank(f.rank(), w.rank(), "averageOver");
  // Scale to a common denominator; the accumulation then runs on machine integers
  // whenever the scaled numerators are small (the usual case: A_{Φ,λ} has ±1 entries).
  BigInt common = 1;
  for (const auto& [mu, c] : f.terms()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<std::pair<Weight, std::int64_t>> scaled;
  bool small = true;
  for (const auto& [mu, c] : f.terms()) {
    BigInt num = c.get_num() * (common / c.get_den());
    if (!num.fits_sint_p()) {
      small = false;
      break;
    }
    scaled.emplace_back(mu, num.get_si());
  }
  FormalCharacter out(f.rank());
  const Rational inv = Rational(1) / (orderOf(w) * Rational(common));
  Weight image(f.rank());
  if (small) {
    std::unordered_map<Weight, std::int64_t, WeightHash> acc;
    w.forEach([&](const SignedPermutation& g) {
      for (const auto& [mu, c] : scaled) {
        g.applyInto(mu, image);
        acc[image] += c;
      }
    });
    for (auto& [mu, c] : acc)
      if (c != 0) out.add(mu, Rational(BigInt(std::to_string(c))) * inv);
    return out;
  }
  std::unordered_map<Weight, Rational, WeightHash> acc;
  w.forEach([&](const SignedPermutation& g) {
    for (const auto& [mu, c] : f.terms()) {
      g.applyInto(mu, image);
      acc[image] += c;
    }
  });
  const Rational invOrder = 1 / orderOf(w);
  for (auto& [mu, c] : acc) out.add(mu, c * invOrder);
  return out;
}

FormalCharacter chiStar(const Weight& lambda, const WeylGroup& w) {
  requireRank(lambda.rank(), w.rank(), "chiStar");
  return averageOver(FormalCharacter::monomial(lambda), w);
}

FormalCharacter aPhiLambda(const SubRootSystem& phi, const Weight& lambda) {
  requireRank(lambda.rank(), phi.rank(), "aPhiLambda");
  const Weight delta = deltaPhi(phi);
  const Weight shifted = lambda + delta;
  FormalCharacter out(phi.rank());
  Weight wd(phi.rank());
  phi.weylGroup().forEach([&](const SignedPermutation& g) {
    g.applyInto(delta, wd);
    out.add(shifted - wd, g.sgn());
  });
  return out;
}

FormalCharacter fPhiLambdaW(const SubRootSystem& phi, const Weight& lambda, const WeylGroup& w) {
  requireRank(w.rank(), phi.rank(), "fPhiLambdaW");
  if (!w.containsGroup(phi.weylGroup()))
    throw std::invalid_argument("fPhiLambdaW: " + w.name() + " does not contain the Weyl group of " +
                                phi.name());
  return averageOver(aPhiLambda(phi, lambda), w);
}

FormalCharacter fPhiLambdaWViaChiStar(const SubRootSystem& phi, const Weight& lambda,
                                      const WeylGroup& w) {
  requireRank(w.rank(), phi.rank(), "fPhiLambdaWViaChiStar");
  if (!w.containsGroup(phi.weylGroup()))
    throw std::invalid_argument("fPhiLambdaWViaChiStar: " + w.name() +
                                " does not contain the Weyl group of " + phi.name());
  const Weight delta = deltaPhi(phi);
  FormalCharacter out(phi.rank());
  phi.weylGroup().forEach([&](const SignedPermutation& g) {
    FormalCharacter term = chiStar(lambda + delta - g.apply(delta), w);
    if (g.sgn() < 0) term *= Rational(-1);
    out += term;
  });
  return out;
}

FormalCharacter weylProduct(const SubRootSystem& phi) {
  FormalCharacter product = FormalCharacter::monomial(Weight(phi.rank()));
  for (const auto& a : phi.roots()) {
    FormalCharacter factor = FormalCharacter::monomial(Weight(phi.rank()));
    factor.add(a, -1);
    product = multiply(product, factor);
  }
  return product * (1 / orderOf(phi.weylGroup()));
}

}  // namespace dimdatum
