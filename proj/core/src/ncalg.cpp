#include "qcoord/ncalg.hpp"

namespace qcoord {

NcMonomial NcMonomial::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::string codes;
  for (const auto& [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("generator index out of range");
    codes.push_back(static_cast<char>(generator_code(n, i, j)));
  }
  return NcMonomial(std::move(codes));
}

std::string NcMonomial::to_string(int n, char symbol) const {
  if (codes_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += "*";
    GeneratorId g = generator_id(n, (*this)[i]);
    out += symbol;
    out += "[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
  }
  return out;
}

std::vector<int> NcMonomial::exponents(int num_generators) const {
  std::vector<int> e(static_cast<std::size_t>(num_generators), 0);
  for (char c : codes_) ++e[static_cast<unsigned char>(c)];
  return e;
}

}  // namespace qcoord
