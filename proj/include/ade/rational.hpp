#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ade {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0. Result is canonical.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace ade
