#include "reconf/encoding.hpp"

#include <algorithm>

#include "reconf/core.hpp"

namespace reconf {

int enc(const BitString& s) {
  if (s.empty()) throw DomainError("enc: empty string");
  for (std::size_t i = s.size(); i > 0; --i)
    if (s[i - 1]) return static_cast<int>(i);
  return 1;
}

namespace {

// Flip the entries of the first `len` positions where cur differs from goal, in index order.
void walk_prefix(std::vector<BitString>& path, BitString cur, const BitString& goal, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (cur[i] != goal[i]) {
      cur[i] = goal[i];
      path.push_back(cur);
    }
}

std::vector<BitString> build(const BitString& s, const BitString& t, std::size_t w) {
  if (s == t) return {s};
  const auto a = enc(BitString(s.begin(), s.begin() + w));
  const auto b = enc(BitString(t.begin(), t.begin() + w));
  const int top = static_cast<int>(w);
  if (a < top && b < top) return build(s, t, w - 1);
  std::vector<BitString> path{s};
  if (a == top && b == top) {
    // entry w agrees unless w == 1, where F and T both encode to 1
    walk_prefix(path, s, t, w);
    return path;
  }
  if (a == top) {
    BitString mid = t;
    mid[w - 1] = 1;
    walk_prefix(path, s, mid, w - 1);
    path.push_back(t);
    return path;
  }
  auto back = build(t, s, w);
  std::reverse(back.begin(), back.end());
  return back;
}

}  // namespace

std::vector<BitString> enc_path(const BitString& s, const BitString& t) {
  if (s.size() != t.size() || s.empty()) throw DomainError("enc_path: strings must share a positive length");
  // Entries past the active prefix agree (F) on the recursive branch, so the full strings are carried along.
  return build(s, t, s.size());
}

std::vector<BitString> preimages(int symbol, int w) {
  if (w < 1 || symbol < 1 || symbol > w) throw DomainError("preimages: symbol outside [W]");
  std::vector<BitString> out;
  BitString s(w, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << w); ++code) {
    for (int i = 0; i < w; ++i) s[i] = (code >> (w - 1 - i)) & 1;
    if (enc(s) == symbol) out.push_back(s);
  }
  return out;
}

BitString smallest_preimage(int symbol, int w) {
  if (w < 1 || symbol < 1 || symbol > w) throw DomainError("smallest_preimage: symbol outside [W]");
  BitString s(w, 0);
  if (symbol > 1) s[symbol - 1] = 1;
  return s;
}

BitString parse_bits(const std::string& tf) {
  BitString s;
  for (char c : tf) {
    if (c != 'T' && c != 'F') throw DomainError("bit strings use T and F");
    s.push_back(c == 'T');
  }
  return s;
}

std::string format_bits(const BitString& s) {
  std::string out;
  for (auto b : s) out.push_back(b ? 'T' : 'F');
  return out;
}

}  // namespace reconf
