#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace geomet {

using Rational = mpq_class;

// p/q in lowest terms; mpq_class(p, q) alone leaves 2/2 uncanonicalized.
Rational ratio(long p, long q);
// Always "p/q", even for integers, so files stay uniform.
std::string to_text(const Rational& q);
// Accepts "p/q", "p" or "-p/q"; denominator must be positive.
Rational parse_rational(std::string_view text);

}  // namespace geomet
