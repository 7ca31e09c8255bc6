#include "qcoord/skeinconst.hpp"

#include <stdexcept>

namespace qcoord {

namespace {

LaurentScalar signed_v(int sign_exponent, int v_exponent) {
  return LaurentScalar::monomial(sign_exponent % 2 == 0 ? 1 : -1, v_exponent);
}

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

}  // namespace

ConstantTable constants(int n) {
  check_rank(n);
  ConstantTable table;
  table.n = n;
  // With q = v^{2n}: q^{(n-1)/2n} = v^{n-1}, q^{(n^2-1)/n} = v^{2(n^2-1)},
  // q^{(n^2-1)/2} = v^{n(n^2-1)}, q^{(n+1-2n^2)/4} = v^{n(n+1-2n^2)/2}.
  for (int i = 1; i <= n; ++i) table.c.push_back(signed_v(n - i, 2 * n * (n - i) + (n - 1)));
  table.t = signed_v(n - 1, 2 * (n * n - 1));
  table.t_half = signed_v(n * (n - 1) / 2, n * (n * n - 1));
  table.a = LaurentScalar::v(n * (n + 1 - 2 * n * n) / 2);
  table.d_n = (n - 1) % 2 == 0 ? 1 : -1;
  return table;
}

bool check_constant_identities(int n) {
  ConstantTable table = constants(n);
  LaurentScalar prod(1L);
  for (const auto& c : table.c) prod *= c;
  if (!(prod == table.t_half)) return false;
  for (int i = 1; i <= n; ++i)
    if (!(table.c_at(i) * table.c_at(dual_state(n, i)) == table.t)) return false;
  return true;
}

LaurentScalar q_number(int k, QNumberKind kind, int n) {
  check_rank(n);
  if (k < 0) throw std::invalid_argument("q_number needs k >= 0");
  auto bracket = [n](int j) {
    LaurentScalar s;
    for (int e = j - 1; e >= 1 - j; e -= 2) s += q_power(n, e);
    return s;
  };
  if (kind == QNumberKind::integer) return bracket(k);
  LaurentScalar f(1L);
  for (int j = 1; j <= k; ++j) f *= bracket(j);
  return f;
}

LaurentScalar permutation_length_sum(int k, int n) {
  if (k < 1 || k > 8) throw std::invalid_argument("permutation enumeration limited to 1 <= k <= 8");
  LaurentScalar sum;
  Permutation p(k);
  do {
    sum += q_power(n, 2 * p.length());
  } while (p.next());
  return sum;
}

bool perm_sum_identity(int k, int n) {
  LaurentScalar rhs = q_number(k, QNumberKind::factorial, n) * LaurentScalar::v(n * k * (k - 1));
  return permutation_length_sum(k, n) == rhs;
}

HeightExchangeCoeffs height_exchange_coeffs(int n, int i, int j) {
  check_rank(n);
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("state out of range");
  HeightExchangeCoeffs out;
  if (j != dual_state(n, i)) {
    out.kind = HeightExchangeCoeffs::Case::generic;
    out.lead = LaurentScalar::v(2);  // q^{1/n}
    return out;
  }
  ConstantTable table = constants(n);
  out.kind = HeightExchangeCoeffs::Case::dual;
  out.lead = LaurentScalar::v(2 * (1 - n));  // q^{(1-n)/n}
  LaurentScalar one_minus_q2 = LaurentScalar(1L) - q_power(n, 2);
  for (int k = j + 1; k <= n; ++k)
    out.cross.emplace(k, out.lead * table.c_at(i) * one_minus_q2 * table.c_at(dual_state(n, k)).inverse());
  return out;
}

}  // namespace qcoord
