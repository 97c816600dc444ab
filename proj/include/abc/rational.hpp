#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace abc {

// Exact fraction. mpq_class keeps numerator/denominator canonical after every
// arithmetic operation, so equality is structural.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q" in canonical form, integers without the "/q".
std::string to_string(const Rational& value);

// Accepts "p", "p/q", "-p/q"; normalizes. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

mpz_class floor_of(const Rational& value);
mpz_class ceil_of(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace abc
