#include "cablejones/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cablejones/errors.hpp"

namespace cj {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw StructureError("braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw StructureError("braid letter " + std::to_string(l) + " out of range for " +
                           std::to_string(strands_) + " strands");
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<int> letters;
  std::string tok;
  int top = 0;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (used != tok.size() || v == 0) throw ParseError("bad braid letter '" + tok + "'");
    letters.push_back(v);
    top = std::max(top, std::abs(v));
  }
  return BraidWord(strands > 0 ? strands : top + 1, std::move(letters));
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters_) w += l > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  // at[pos] = starting position of the strand currently at pos
  std::vector<int> at(static_cast<size_t>(strands_));
  std::iota(at.begin(), at.end(), 0);
  for (int l : letters_) {
    int i = std::abs(l) - 1;
    std::swap(at[static_cast<size_t>(i)], at[static_cast<size_t>(i + 1)]);
  }
  std::vector<int> perm(static_cast<size_t>(strands_));
  for (int pos = 0; pos < strands_; ++pos) perm[static_cast<size_t>(at[static_cast<size_t>(pos)])] = pos;
  return perm;
}

int BraidWord::components() const {
  auto perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

void BraidWord::require_knot() const {
  int c = components();
  if (c != 1)
    throw StructureError("braid closure has " + std::to_string(c) + " components, expected a knot");
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> out = letters_;
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::cabled(int m) const {
  if (m < 1) throw DomainError("cable multiplicity must be positive");
  std::vector<int> out;
  out.reserve(letters_.size() * static_cast<size_t>(m * m));
  for (int l : letters_) {
    int i = std::abs(l);
    int sign = l > 0 ? 1 : -1;
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out.push_back(sign * (i * m - j + k));
  }
  return BraidWord(strands_ * m, std::move(out));
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

}  // namespace cj
