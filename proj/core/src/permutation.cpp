#include "qcoord/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcoord {

Permutation::Permutation(int k) : images_(static_cast<std::size_t>(k)) {
  if (k < 0) throw std::invalid_argument("negative permutation size");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  Permutation p(k);
  do {
    out.push_back(p);
  } while (p.next());
  return out;
}

}  // namespace qcoord
