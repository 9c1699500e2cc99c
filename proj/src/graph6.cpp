#include "dpcolor/graph6.hpp"

#include <stdexcept>

namespace dpcolor {

namespace {

constexpr const char* kHeader = ">>graph6<<";

int decode_byte(char c) {
  int b = int(static_cast<unsigned char>(c)) - 63;
  if (b < 0 || b > 63) throw std::invalid_argument("graph6: byte out of range");
  return b;
}

}  // namespace

Multigraph read_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = decode_byte(s[pos++]);
  } else if (s.size() >= 4 && s[1] != '~') {
    n = 0;
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(s[pos++]);
  } else {
    throw std::invalid_argument("graph6: vertex counts above 258047 unsupported");
  }

  const long long bits_needed = n * (n - 1) / 2;
  if (static_cast<long long>(s.size() - pos) != (bits_needed + 5) / 6)
    throw std::invalid_argument("graph6: wrong length for vertex count");

  std::vector<EdgeSlot> es;
  long long bit = 0;
  int cur = 0, have = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      if (have == 0) {
        cur = decode_byte(s[pos++]);
        have = 6;
      }
      if (cur & (1 << (have - 1))) es.push_back({u, v, 1});
      --have;
    }
  return Multigraph::build(int(n), std::move(es));
}

std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6: graph must be simple");
  const long long n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: vertex counts above 258047 unsupported");
  }
  int cur = 0, have = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++have == 6) {
        out.push_back(char(cur + 63));
        cur = have = 0;
      }
    }
  if (have > 0) out.push_back(char((cur << (6 - have)) + 63));
  return out;
}

}  // namespace dpcolor
