#ifndef OPTSEQ_ASDS_HPP
#define OPTSEQ_ASDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "optseq/cocycles.hpp"
#include "optseq/seq.hpp"
#include "optseq/transforms.hpp"

namespace optseq {

/// A pair of subsets B, D of Z_m, elements reduced to 0..m-1, no duplicates.
struct SubsetPair {
  int m = 0;
  std::vector<int> b;
  std::vector<int> d;

  SubsetPair() = default;
  SubsetPair(int m_, std::vector<int> b_, std::vector<int> d_);

  int k1() const { return static_cast<int>(b.size()); }
  int k2() const { return static_cast<int>(d.size()); }
  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// Parameters 2-{m; k1, k2; mu; t}: the combined difference counts take the
/// value mu on t nonzero residues and mu+1 on the remaining m-1-t.  A pair
/// with constant counts is reported with t = m-1 (supplementary difference
/// sets); they satisfy k1(k1-1) + k2(k2-1) = t*mu + (m-1-t)(mu+1).
struct AsdsParams {
  int m = 0;
  int k1 = 0;
  int k2 = 0;
  std::int64_t mu = 0;
  int t = 0;

  bool is_sds() const { return t == m - 1; }
  friend bool operator==(const AsdsParams&, const AsdsParams&) = default;
};

/// Delta(a) = #{(x,x') in B^2 : x-x' = a} + #{(y,y') in D^2 : y-y' = a},
/// indexed a = 0..m-1 (entry 0 is the trivial count k1 + k2; classification
/// looks only at a != 0).
std::vector<std::int64_t> difference_counts(const SubsetPair& pair);

/// d_X(w) = #{(x,x') in X^2 : x - x' = w} for a single subset of Z_m.
std::int64_t subset_difference_count(int m, const std::vector<int>& x, int w);

/// ASDS/SDS classification; std::nullopt when the nonzero difference counts
/// take three or more values (or two values not of the form mu, mu+1).
std::optional<AsdsParams> classify(const SubsetPair& pair);

/// Weaker shape test used by the bridge theorems: every nonzero difference
/// count lies in {mu, mu+1} for the *given* mu.  (classify() reports constant
/// counts c canonically as SDS with mu = c; the same pair also matches shape
/// mu = c-1 with t = 0, which is the form the bridges need.)
bool has_asds_shape(const SubsetPair& pair, std::int64_t mu);

/// True iff the multiset B - D = {x - y mod m} is closed under negation.
bool symmetric_difference_check(const SubsetPair& pair);

/// Circulant {+-1}-matrix S^c with entry (i,j) = 1 - 2 chi_S(j - i).
struct CirculantPM {
  int m = 0;
  std::vector<std::int8_t> v;  // row-major m x m

  int at(int i, int j) const { return v[static_cast<std::size_t>(i) * m + j]; }
  /// Subset read back from the first row.
  std::vector<int> first_row_subset() const;
};

CirculantPM circulant(int m, const std::vector<int>& s);

/// Gram characterization: B^c (B^c)^T + D^c (D^c)^T has diagonal 2m and
/// off-diagonal entries 2m - 4(k1+k2-mu) on residues where the count is mu,
/// 2m - 4(k1+k2-mu-1) elsewhere.  Verifies the classified pair against the
/// matrix form.
bool gram_check(const SubsetPair& pair, const AsdsParams& params);

/// The reverse direction: read subsets off the first rows of two circulant
/// {+-1}-matrices and classify; nullopt when the Gram sum is not of ASDS/SDS
/// shape.  On success *out (if given) receives the pair.
std::optional<AsdsParams> gram_to_asds(const CirculantPM& bc, const CirculantPM& dc,
                                       SubsetPair* out = nullptr);

/// Complement variants (i) (~B, D), (ii) (B, ~D), (iii) (~B, ~D), classified;
/// parameters come out as {m-k1, k2, m-2k1+mu}, {k1, m-k2, m-2k2+mu},
/// {m-k1, m-k2, 2m-2k1-2k2+mu} with t unchanged.
struct ComplementVariant {
  SubsetPair pair;
  AsdsParams params;
};
std::vector<ComplementVariant> complement_variants(const SubsetPair& pair);

/// Supports of -1 in the two rows of a (2,m)-array, plus the deterministic
/// complement policy ensuring |B| + |D| >= (m+1)/2: complement D first, then
/// B instead, then both, taking the first that suffices.  All verdicts a
/// bridge theorem needs are carried along; nothing here assumes the input
/// came from an OQS.
struct BridgePair {
  SubsetPair pair;          // post-policy subsets
  std::int64_t mu = 0;      // |B| + |D| - (m+1)/2 for the post-policy sizes
  int complement_case = 0;  // 0 = none, 1 = D, 2 = B, 3 = both
  bool asds_ok = false;     // has_asds_shape(pair, mu)
  bool symmetric = false;   // symmetric_difference_check(pair)
  bool symmetric_raw = false;  // same check on the pre-policy pair

  bool verdict() const { return asds_ok && symmetric; }
};

BridgePair bridge_pair_of_array(const GrayPair& phi);

/// OQS -> ASDS: requires is_oqs(f); returns the associated pair with
/// parameters {m; |B|, |D|; |B|+|D|-(m+1)/2} and symmetric B - D.
struct OqsAsdsBridge {
  SubsetPair pair;
  AsdsParams params;
  bool symmetric_raw = false;
  int complement_case = 0;
};
OqsAsdsBridge asds_from_oqs(const QuaternarySeq& f);

/// ASDS -> OQS: requires classification with mu = k1 + k2 - (m+1)/2 and a
/// symmetric B - D; throws std::invalid_argument naming the failed condition
/// otherwise.  The returned sequence always satisfies is_oqs.
QuaternarySeq oqs_from_asds(const SubsetPair& pair);

/// Cocycle (lambda * product of d_j) -> subsets B = {j-1 : 2<=j<=m, k_j=1},
/// D = {j-m-1 : m+1<=j<=2m-1, k_j=1}.  Throws unless lambda_flag is set.
SubsetPair asds_from_cocycle(const Cocycle& psi);

/// Reverse direction; requires 0 not in B and m-1 not in D.
Cocycle cocycle_from_asds(const SubsetPair& pair);

/// True iff B^c (D^c)^T is symmetric; equals symmetric_difference_check on
/// every input.  Throws std::invalid_argument when B or D is empty.
bool amicable_check(const SubsetPair& pair);

/// Size bound for Theorem-5-shaped parameters:
///   (m-1)^2/2 <= (k1+k2)m - (k1^2+k2^2) <= (m^2-1)/2.
bool size_bounds_check(const AsdsParams& params);

enum class Perturbation { remove, add };

/// Remove an element from B (or add one outside B and D) of an SDS pair,
/// reclassify, and report whether the result is an ASDS with t = (m-1)/2 and
/// whether the removal/addition parameter identities
///   remove: k1 = (m+3)/4, mu = (m+3)/16 + (k2^2-k2)/(m-1)
///   add:    k1 = (m-1)/4, mu = (m-5)/16 + (k2^2-k2)/(m-1)
/// hold for the original SDS parameters (checked as exact rationals).
struct PerturbationReport {
  AsdsParams before;
  std::optional<AsdsParams> after;
  bool asds_with_half_t = false;
  bool lemma_formulas_hold = false;
};
PerturbationReport sds_perturbation_check(const SubsetPair& pair,
                                          Perturbation mode, int element);

}  // namespace optseq

#endif
