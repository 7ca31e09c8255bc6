#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcoord/laurent.hpp"
#include "qcoord/permutation.hpp"

namespace qcoord {

/// The dual state n + 1 - i.
inline int dual_state(int n, int i) { return n + 1 - i; }

/// Skein constants of rank n. Every entry is a signed power of v.
struct ConstantTable {
  int n = 1;
  std::vector<LaurentScalar> c;  ///< c[i-1] = c_i = (-q)^{n-i} q^{(n-1)/2n}
  LaurentScalar t;               ///< (-1)^{n-1} q^{(n^2-1)/n}
  LaurentScalar t_half;          ///< t^{n/2} = (-1)^{n(n-1)/2} q^{(n^2-1)/2}
  LaurentScalar a;               ///< q^{(n+1-2n^2)/4}
  int d_n = 1;                   ///< (-1)^{n-1}

  const LaurentScalar& c_at(int i) const { return c[static_cast<std::size_t>(i - 1)]; }
};

ConstantTable constants(int n);

/// prod_i c_i == t^{n/2} and c_i c_{n+1-i} == t for every i, exactly.
bool check_constant_identities(int n);

enum class QNumberKind { integer, factorial };

/// [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}, or [k]! = [1][2]...[k], with q = v^{2n}.
LaurentScalar q_number(int k, QNumberKind kind, int n);

/// Sum over S_k of (q^2)^{length(sigma)}.
LaurentScalar permutation_length_sum(int k, int n);
/// Compares permutation_length_sum(k) with [k]! q^{k(k-1)/2} exactly. k is limited to 1..8.
bool perm_sum_identity(int k, int n);

/// Coefficients for exchanging the heights of two boundary endpoints with
/// opposite orientations, states i (lower) and j (upper).
struct HeightExchangeCoeffs {
  enum class Case { generic, dual };
  Case kind = Case::generic;
  LaurentScalar lead;
  /// State k (j < k <= n) -> coefficient of the (k, n+1-k) term; empty in the generic case.
  std::map<int, LaurentScalar> cross;
};

HeightExchangeCoeffs height_exchange_coeffs(int n, int i, int j);

}  // namespace qcoord
