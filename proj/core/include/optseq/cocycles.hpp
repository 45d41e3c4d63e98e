#ifndef OPTSEQ_COCYCLES_HPP
#define OPTSEQ_COCYCLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "optseq/transforms.hpp"

namespace optseq {

/// The group G = Z_2 x Z_m, m odd, with its fixed element ordering
///   g_1 = (0,0), g_2 = (0,1), ..., g_m = (0,m-1),
///   g_{m+1} = (1,0), ..., g_{2m} = (1,m-1).
/// Elements are handled as 0-based indices idx = a*m + u (so g_i has
/// idx = i - 1); basis indices keep the 1-based numbering.
struct GroupZ2m {
  int m;

  explicit GroupZ2m(int m_);

  int order() const { return 2 * m; }
  int mul(int x, int y) const {
    const int a = (x >= m) ^ (y >= m);
    int u = x % m + y % m;
    if (u >= m) u -= m;
    return a * m + u;
  }
  /// lambda((a,u),(b,w)) = -1 iff a = b = 1.
  bool lambda_negative(int x, int y) const { return x >= m && y >= m; }
};

/// A cocycle over Z_2 x Z_m with coefficients <-1>, in the basis
/// {lambda, d_2, ..., d_{2m-1}} (d_i = coboundary of the -1-at-g_i map):
/// lambda_flag is the lambda exponent and bit (i-2) of delta_mask the
/// exponent of d_i.  lambda_flag = 0 exactly for coboundaries.
struct Cocycle {
  int m = 0;
  bool lambda_flag = false;
  std::uint64_t delta_mask = 0;

  Cocycle() = default;
  Cocycle(int m_, bool lambda, std::uint64_t mask);

  /// 1-based basis indices i with d_i present, ascending.
  std::vector<int> delta_indices() const;
  static Cocycle from_delta_indices(int m, bool lambda,
                                    const std::vector<int>& indices);
  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

/// 2m x 2m matrix of +-1 with rows/columns in the g-ordering, packed one
/// row per 64-bit word (bit = 1 means entry -1).  Millions of these get
/// built and scored in the exhaustive suites.
struct CocyclicMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;

  int entry(int r, int c) const { return (rows[r] >> c) & 1u ? -1 : 1; }
  std::int64_t row_sum(int r) const;
  friend bool operator==(const CocyclicMatrix&, const CocyclicMatrix&) = default;
};

/// Coboundary of a normalized map phi: G -> {+-1} (phi given over the
/// g-ordering, phi[0] = +1): table d_phi(g,h) = phi(g) phi(h) phi(gh).
CocyclicMatrix coboundary_of(const GroupZ2m& g, std::span<const std::int8_t> phi);

/// Raw generator exponents e_i = [phi(g_i) = -1] for i = 2..2m, as bits
/// (i-2) of the result.  Note that i = 2m lies outside the basis; it reduces
/// via d_{2m} = d_{m+1} * ... * d_{2m-1}.
std::uint64_t coboundary_exponents(std::span<const std::int8_t> phi);

/// d_phi expressed in the basis (the i = 2m generator folded away).
Cocycle coboundary_cocycle(const GroupZ2m& g, std::span<const std::int8_t> phi);

/// Basis coboundary matrix M_{d_i}, 2 <= i <= 2m, built from the block form:
/// the normalization of [[C_i, J], [J, C_i]] for i <= m and of
/// [[J, C_{i-m}], [C_{i-m}, J]] for i > m, where C_j is the m x m back
/// circulant with first row all 1s except position j.  Index 2m is allowed
/// so the reduction identity can be checked both ways.
CocyclicMatrix basis_matrix(int m, int i);

/// M_lambda = [[J, J], [J, -J]] in the g-ordering.
CocyclicMatrix lambda_matrix(int m);

/// Matrix of a cocycle in basis form (entrywise product of the factors,
/// evaluated directly from the defining maps).
CocyclicMatrix cocycle_matrix(const Cocycle& psi);

/// Sum of |row sum| over all rows except the one indexed by the identity.
std::int64_t row_excess(const CocyclicMatrix& mat);

/// Least-possible row excess test: RE = 2m - 2 for non-coboundaries
/// (lambda_flag set), RE = 4m - 2 for coboundaries.
bool is_quasi_orthogonal(const Cocycle& psi);

/// lambda * d_phi for a normalized (2,m)-array (phi(0,0) = +1; throws
/// otherwise), with d_phi reduced into the basis.
Cocycle cocycle_from_array(const GrayPair& phi);

/// Functional cocycle identity psi(g,h) psi(gh,k) = psi(g,hk) psi(h,k)
/// checked over all of G^3, plus normalization psi(1,1) = 1.
bool satisfies_cocycle_identity(const GroupZ2m& g, const CocyclicMatrix& mat);

}  // namespace optseq

#endif
