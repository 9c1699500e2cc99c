#include "dpcolor/rational.hpp"

#include <stdexcept>

namespace dpcolor {

namespace {

std::string render_fixed(const Rat& r, int places, bool round_half_even) {
  if (places < 0) throw std::invalid_argument("to_decimal: places must be >= 0");
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  const bool neg = r.numerator() < 0;
  __int128 num = r.numerator();
  if (neg) num = -num;
  const __int128 den = r.denominator();  // boost keeps this positive

  __int128 scaled = num * scale;
  __int128 q = scaled / den;
  if (round_half_even) {
    __int128 rem = scaled % den;
    if (2 * rem > den || (2 * rem == den && (q & 1))) ++q;
  }

  __int128 whole = q / scale, frac = q % scale;
  std::string digits;
  if (whole == 0) digits = "0";
  for (__int128 w = whole; w > 0; w /= 10) digits.insert(digits.begin(), char('0' + int(w % 10)));
  std::string out;
  if (neg && q != 0) out = "-";
  out += digits;
  if (places > 0) {
    std::string f(places, '0');
    for (int i = places - 1; i >= 0 && frac > 0; --i, frac /= 10) f[i] = char('0' + int(frac % 10));
    out += "." + f;
  }
  return out;
}

}  // namespace

std::string to_decimal(const Rat& r, int places) { return render_fixed(r, places, true); }

std::string to_decimal_trunc(const Rat& r, int places) { return render_fixed(r, places, false); }

std::string to_fraction(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace dpcolor
