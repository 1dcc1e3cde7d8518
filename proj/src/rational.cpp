#include "dimdatum/rational.hpp"

#include <stdexcept>

namespace dimdatum {

Rational makeRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q{BigInt(std::to_string(num)), BigInt(std::to_string(den))};
  q.canonicalize();
  return q;
}

Rational parseRational(const std::string& text) {
  auto isDigits = [](const std::string& s, bool allowSign) {
    std::size_t i = 0;
    if (allowSign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!isDigits(num, true) || !isDigits(den, false))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q{BigInt(num), d};
  q.canonicalize();
  return q;
}

std::string toFractionString(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool isInteger(const Rational& q) { return q.get_den() == 1; }

std::int64_t toInt64(const Rational& q) {
  if (!isInteger(q)) throw std::domain_error("not an integer: " + toFractionString(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return q.get_num().get_si();
}

}  // namespace dimdatum
