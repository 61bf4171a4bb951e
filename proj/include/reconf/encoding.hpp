#pragma once

#include <string>
#include <vector>

namespace reconf {

// Entry i (0-based) of a bit string is s_{i+1}; 1 means T.
using BitString = std::vector<std::uint8_t>;

// 1 if every entry is F, otherwise the largest 1-based index holding T.
int enc(const BitString& s);
// Path of single flips from s to t through strings encoding to enc(s) or enc(t).
std::vector<BitString> enc_path(const BitString& s, const BitString& t);
// All strings of length w with enc = symbol, in lexicographic order (F < T, s_1 most significant).
std::vector<BitString> preimages(int symbol, int w);
BitString smallest_preimage(int symbol, int w);

BitString parse_bits(const std::string& tf);  // "TFF"
std::string format_bits(const BitString& s);

}  // namespace reconf
