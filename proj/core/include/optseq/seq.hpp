#ifndef OPTSEQ_SEQ_HPP
#define OPTSEQ_SEQ_HPP

#include <cstdint>
#include <vector>

namespace optseq {

// Hard cap on sequence/array length so that correlation sums of unit values
// can never overflow a 64-bit accumulator.
inline constexpr std::size_t kMaxLength = std::size_t{1} << 20;

/// Exact complex integer; carries periodic correlation values R(w).
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  GaussianInt conj() const { return {re, -im}; }
  /// Squared modulus |z|^2 = re^2 + im^2.
  std::int64_t norm() const { return re * re + im * im; }
};

/// A +/-1 valued sequence over Z_n.
struct BinarySeq {
  std::vector<std::int8_t> v;  // entries are +1 or -1

  BinarySeq() = default;
  explicit BinarySeq(std::vector<std::int8_t> vals);

  std::size_t size() const { return v.size(); }
  int at(std::size_t k) const { return v[k]; }
  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;

  static BinarySeq all_ones(std::size_t n);
};

/// A sequence over the fourth roots of unity, stored as exponents:
/// f(k) = i^e[k] with e[k] in {0,1,2,3}.  All arithmetic stays in
/// mod-4 exponents, so every computation on these is exact.
struct QuaternarySeq {
  std::vector<std::uint8_t> e;

  QuaternarySeq() = default;
  explicit QuaternarySeq(std::vector<std::uint8_t> exps);

  std::size_t size() const { return e.size(); }
  GaussianInt value(std::size_t k) const;
  friend bool operator==(const QuaternarySeq&, const QuaternarySeq&) = default;

  static QuaternarySeq all_ones(std::size_t n);
};

/// The unit i^e as a Gaussian integer.
GaussianInt unit_root(unsigned e);

/// Periodic autocorrelation R(w) = sum_k f(k) * conj(f(k+w)), indices mod n,
/// for every shift w = 0..n-1.  Entry 0 is always (n, 0); binary input gives
/// im = 0 everywhere.
std::vector<GaussianInt> autocorrelation_spectrum(const BinarySeq& phi);
std::vector<GaussianInt> autocorrelation_spectrum(const QuaternarySeq& f);

/// Periodic cross-correlation R_{a,b}(w) = sum_k a(k) * b(k+w).
/// Throws std::invalid_argument on length mismatch.
std::vector<std::int64_t> cross_correlation_spectrum(const BinarySeq& a,
                                                     const BinarySeq& b);

/// Negaperiodic ("odd") autocorrelation:
///   entry w = sum_{k=0}^{n-1} (-1)^floor((k+w)/n) * phi(k) * phi((k+w) mod n),
/// i.e. terms that wrap past the end flip sign.  The periodic autocorrelation
/// of the doubled sequence (phi, -phi) at shift 0 <= w < n equals twice this.
std::vector<std::int64_t> odd_autocorrelation_spectrum(const BinarySeq& phi);

/// True iff f has odd length m and |R_f(w)| = 1 for all 0 < w < m.  When the
/// modulus test passes every such R_f(w) is provably real, and that is
/// re-checked here.  Throws std::invalid_argument for even length.
bool is_oqs(const QuaternarySeq& f);

/// Optimal periodic autocorrelation for binary sequences, by length class:
///   n = 0 mod 4: R(w) in {0, +-4};  n = 1 mod 4: R(w) in {1, -3};
///   n = 2 mod 4: R(w) in {2, -2};   n = 3 mod 4: R(w) = -1,
/// for all 0 < w < n.  Requires n >= 2.
bool is_optimal_binary(const BinarySeq& phi);

/// d_phi(x) = |N ∩ (x + N)| where N = {k : phi(k) = -1}, indices in Z_n.
/// Satisfies R_phi(x) = n + 4*(d_phi(x) - |N|).
std::int64_t difference_counts_of_support(const BinarySeq& phi,
                                          std::int64_t shift);

}  // namespace optseq

#endif
