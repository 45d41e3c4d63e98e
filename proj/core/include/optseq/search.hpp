#ifndef OPTSEQ_SEARCH_HPP
#define OPTSEQ_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "optseq/asds.hpp"
#include "optseq/seq.hpp"

namespace optseq {

inline constexpr std::uint64_t kDefaultOqsBudget = std::uint64_t{1} << 26;  // 4^13
inline constexpr std::uint64_t kDefaultAsdsBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;

/// Base-4 encoding of a quaternary sequence: digit k of weight 4^(m-1-k) is
/// the exponent e(k), so numeric order is lexicographic order on exponents.
std::uint64_t encode_base4(const QuaternarySeq& f);
QuaternarySeq decode_base4(int m, std::uint64_t code);

/// Least encoding in the equivalence class of f under global unit
/// multiplication, cyclic shifts, and conjugation (negating the second Gray
/// row is conjugation followed by a unit, so it is included).
std::uint64_t canonical_code(const QuaternarySeq& f);

struct OqsRecord {
  QuaternarySeq seq;
  std::vector<GaussianInt> spectrum;
  bool canonical = false;
};

struct OqsSearchOptions {
  bool canonicalize = false;  // keep only class representatives
  int jobs = 1;
  std::uint64_t budget = kDefaultOqsBudget;
};

/// All optimal quaternary sequences of odd length m, in encoding order.
/// Requires m odd and 4^m within budget (default budget caps m at 13).
/// Output is independent of the worker count.
std::vector<OqsRecord> search_oqs(int m, const OqsSearchOptions& opts = {});

struct AsdsRecord {
  SubsetPair pair;
  AsdsParams params;
  bool symmetric = false;
  std::vector<std::int64_t> delta;
};

struct AsdsSearchOptions {
  std::optional<int> k1;
  std::optional<int> k2;
  std::optional<std::int64_t> mu;
  bool symmetric_only = false;
  int jobs = 1;
  std::uint64_t budget = kDefaultAsdsBudget;
};

/// All subset pairs of Z_m classifying as ASDS/SDS, filtered by the given
/// sizes / mu / symmetry, ordered by (B, D) as bitmask integers.
std::vector<AsdsRecord> search_asds(int m, const AsdsSearchOptions& opts = {});

enum class Alphabet { binary, quaternary };

/// Exhaustive minimum over all length-n sequences of max_{0<w<n} |R(w)|,
/// measured as |R(w)| for binary and as the squared modulus |R(w)|^2 for
/// quaternary (quaternary peaks need not be integers, their squares are).
/// n = 1 returns 0: there are no nonzero shifts.
std::int64_t brute_force_optimum(int n, Alphabet alphabet,
                                 std::uint64_t budget = kDefaultBruteBudget);

}  // namespace optseq

#endif
