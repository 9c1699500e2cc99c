#pragma once

#include <boost/rational.hpp>
#include <string>

namespace dpcolor {

// All potential/charge arithmetic is exact. Magnitudes stay tiny (numerators are
// polynomial in k and the vertex count), so int64 components are plenty.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Fixed-point decimal string, round-half-even. places >= 0.
std::string to_decimal(const Rat& r, int places);

// Fixed-point decimal string, truncated toward zero (the convention of the
// published bound table, e.g. 8.142857... -> "8.1428"). places >= 0.
std::string to_decimal_trunc(const Rat& r, int places);

// "p/q", or just "p" when integral.
std::string to_fraction(const Rat& r);

}  // namespace dpcolor
