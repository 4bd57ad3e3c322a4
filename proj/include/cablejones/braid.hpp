#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cj {

// Word in the braid group on `strands` strands; letter i > 0 is sigma_i, i < 0 its inverse.
// Letters are read bottom to top.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  // Whitespace or comma separated signed integers. With strands = 0 the
  // strand count is max|i| + 1.
  static BraidWord parse(std::string_view text, int strands = 0);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int crossings() const { return static_cast<int>(letters_.size()); }
  int writhe() const;
  // perm[i] = final position of the strand starting at position i (0-based).
  std::vector<int> permutation() const;
  int components() const;
  bool closes_to_knot() const { return components() == 1; }
  void require_knot() const;

  BraidWord mirrored() const;
  // Blackboard m-parallel: each band crossing becomes m*m crossings on m*strands strands.
  BraidWord cabled(int m) const;

  std::string str() const;
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

}  // namespace cj
