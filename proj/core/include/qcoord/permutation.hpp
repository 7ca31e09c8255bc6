#pragma once

#include <vector>

namespace qcoord {

/// A bijection of {1..k}, stored as its image sequence.
class Permutation {
 public:
  /// Identity of S_k.
  explicit Permutation(int k);
  /// Throws std::invalid_argument unless images is a bijection of 1..k.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Number of inversions: |{(i,j) : i < j, sigma(i) > sigma(j)}|.
  int length() const;
  /// (-1)^length
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;

  /// Lexicographic successor; at the last permutation wraps to the identity and returns false.
  bool next();

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All of S_k in lexicographic order.
std::vector<Permutation> all_permutations(int k);

}  // namespace qcoord
