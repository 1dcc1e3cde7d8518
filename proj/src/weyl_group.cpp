#include "dimdatum/weyl_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dimdatum {

SignedPermutation::SignedPermutation(std::size_t n) : source_(n), sign_(n, 1) {
  std::iota(source_.begin(), source_.end(), 0);
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : source_(perm.size(), -1), sign_(std::move(signs)) {
  if (sign_.size() != perm.size()) throw std::invalid_argument("signed permutation: length mismatch");
  for (std::size_t j = 0; j < perm.size(); ++j) {
    int i = perm[j];
    if (i < 0 || static_cast<std::size_t>(i) >= perm.size() || source_[i] != -1)
      throw std::invalid_argument("signed permutation: not a bijection");
    source_[i] = static_cast<int>(j);
  }
  for (int s : sign_)
    if (s != 1 && s != -1) throw std::invalid_argument("signed permutation: signs must be ±1");
}

int SignedPermutation::image(std::size_t j) const {
  for (std::size_t i = 0; i < source_.size(); ++i)
    if (source_[i] == static_cast<int>(j)) return static_cast<int>(i);
  throw std::out_of_range("signed permutation index");
}

Weight SignedPermutation::apply(const Weight& w) const {
  Weight out(w.rank());
  applyInto(w, out);
  return out;
}

void SignedPermutation::applyInto(const Weight& w, Weight& out) const {
  if (w.rank() != rank()) throw std::invalid_argument("signed permutation: rank mismatch");
  for (std::size_t i = 0; i < source_.size(); ++i) out.setDoubled(i, sign_[i] * w.doubled(source_[i]));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
  if (rhs.rank() != rank()) throw std::invalid_argument("signed permutation: rank mismatch");
  SignedPermutation c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c.source_[i] = rhs.source_[source_[i]];
    c.sign_[i] = sign_[i] * rhs.sign_[source_[i]];
  }
  return c;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const int j = source_[i];
    inv.source_[j] = static_cast<int>(i);
    inv.sign_[j] = sign_[i];
  }
  return inv;
}

int SignedPermutation::negativeCount() const {
  return static_cast<int>(std::count(sign_.begin(), sign_.end(), -1));
}

int SignedPermutation::sgn() const {
  int inversions = 0;
  for (std::size_t a = 0; a < source_.size(); ++a)
    for (std::size_t b = a + 1; b < source_.size(); ++b)
      if (source_[a] > source_[b]) ++inversions;
  return ((inversions + negativeCount()) % 2 == 0) ? 1 : -1;
}

std::string toString(WeylType t) {
  switch (t) {
    case WeylType::Trivial: return "trivial";
    case WeylType::Symmetric: return "S";
    case WeylType::Hyperoctahedral: return "W";
    case WeylType::EvenSigned: return "W_D";
  }
  return "?";
}

std::uint64_t WeylGroup::order() const {
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= rank_; ++k) fact *= k;
  switch (type_) {
    case WeylType::Trivial: return 1;
    case WeylType::Symmetric: return fact;
    case WeylType::Hyperoctahedral: return fact << rank_;
    case WeylType::EvenSigned: return rank_ == 0 ? 1 : fact << (rank_ - 1);
  }
  return 0;
}

void WeylGroup::forEach(const std::function<void(const SignedPermutation&)>& visit) const {
  SignedPermutation w(rank_);
  if (type_ == WeylType::Trivial) {
    visit(w);
    return;
  }
  const bool signed_ = type_ != WeylType::Symmetric;
  const std::uint64_t masks = signed_ ? (std::uint64_t{1} << rank_) : 1;
  do {
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (type_ == WeylType::EvenSigned && (__builtin_popcountll(mask) % 2) != 0) continue;
      for (std::size_t i = 0; i < rank_; ++i) w.sign_[i] = ((mask >> i) & 1) ? -1 : 1;
      visit(w);
    }
  } while (std::next_permutation(w.source_.begin(), w.source_.end()));
}

bool WeylGroup::contains(const SignedPermutation& w) const {
  if (w.rank() != rank_) return false;
  const int neg = w.negativeCount();
  switch (type_) {
    case WeylType::Trivial: return w == SignedPermutation(rank_);
    case WeylType::Symmetric: return neg == 0;
    case WeylType::Hyperoctahedral: return true;
    case WeylType::EvenSigned: return neg % 2 == 0;
  }
  return false;
}

bool WeylGroup::containsGroup(const WeylGroup& other) const {
  if (other.rank_ != rank_) return false;
  if (other.type_ == WeylType::Trivial || other.type_ == type_) return true;
  switch (type_) {
    case WeylType::Hyperoctahedral: return true;
    case WeylType::EvenSigned: return other.type_ == WeylType::Symmetric;
    // S_1 and W_{D_1} are both trivial.
    case WeylType::Symmetric: return other.order() == 1;
    case WeylType::Trivial: return other.order() == 1;
  }
  return false;
}

std::vector<SignedPermutation> WeylGroup::generators() const {
  std::vector<SignedPermutation> gens;
  if (type_ == WeylType::Trivial || rank_ == 0) return gens;
  std::vector<int> ones(rank_, 1);
  for (std::size_t i = 0; i + 1 < rank_; ++i) {
    std::vector<int> perm(rank_);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    gens.emplace_back(perm, ones);
  }
  std::vector<int> id(rank_);
  std::iota(id.begin(), id.end(), 0);
  if (type_ == WeylType::Hyperoctahedral) {
    std::vector<int> s = ones;
    s[rank_ - 1] = -1;
    gens.emplace_back(id, s);
  } else if (type_ == WeylType::EvenSigned && rank_ >= 2) {
    std::vector<int> s = ones;
    s[rank_ - 1] = s[rank_ - 2] = -1;
    gens.emplace_back(id, s);
  }
  return gens;
}

std::string WeylGroup::name() const { return toString(type_) + std::to_string(rank_); }

}  // namespace dimdatum
