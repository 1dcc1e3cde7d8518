#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dimdatum {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational makeRational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parseRational(const std::string& text);

/// Always "p/q", even for integers ("3/1").
std::string toFractionString(const Rational& q);

bool isInteger(const Rational& q);

/// Converts an integral rational to int64; throws std::domain_error otherwise.
std::int64_t toInt64(const Rational& q);

}  // namespace dimdatum
