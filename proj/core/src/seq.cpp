#include "optseq/seq.hpp"

#include <stdexcept>
#include <string>

namespace optseq {

namespace {

void check_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sequence must be nonempty");
  if (n > kMaxLength)
    throw std::invalid_argument("sequence longer than 2^20 not supported");
}

}  // namespace

BinarySeq::BinarySeq(std::vector<std::int8_t> vals) : v(std::move(vals)) {
  check_length(v.size());
  for (std::int8_t s : v)
    if (s != 1 && s != -1)
      throw std::invalid_argument("binary sequence entries must be +1 or -1");
}

BinarySeq BinarySeq::all_ones(std::size_t n) {
  return BinarySeq(std::vector<std::int8_t>(n, 1));
}

QuaternarySeq::QuaternarySeq(std::vector<std::uint8_t> exps)
    : e(std::move(exps)) {
  check_length(e.size());
  for (std::uint8_t x : e)
    if (x > 3)
      throw std::invalid_argument("quaternary exponents must be in 0..3");
}

QuaternarySeq QuaternarySeq::all_ones(std::size_t n) {
  return QuaternarySeq(std::vector<std::uint8_t>(n, 0));
}

GaussianInt unit_root(unsigned e) {
  switch (e & 3u) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianInt QuaternarySeq::value(std::size_t k) const { return unit_root(e[k]); }

std::vector<GaussianInt> autocorrelation_spectrum(const BinarySeq& phi) {
  const std::size_t n = phi.size();
  std::vector<GaussianInt> r(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t kw = k + w;
      if (kw >= n) kw -= n;
      acc += std::int64_t{phi.v[k]} * phi.v[kw];
    }
    r[w] = {acc, 0};
  }
  return r;
}

std::vector<GaussianInt> autocorrelation_spectrum(const QuaternarySeq& f) {
  const std::size_t n = f.size();
  std::vector<GaussianInt> r(n);
  for (std::size_t w = 0; w < n; ++w) {
    // f(k) * conj(f(k+w)) = i^(e[k] - e[k+w] mod 4)
    std::int64_t re = 0, im = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t kw = k + w;
      if (kw >= n) kw -= n;
      switch ((f.e[k] - f.e[kw]) & 3u) {
        case 0: ++re; break;
        case 1: ++im; break;
        case 2: --re; break;
        default: --im; break;
      }
    }
    r[w] = {re, im};
  }
  return r;
}

std::vector<std::int64_t> cross_correlation_spectrum(const BinarySeq& a,
                                                     const BinarySeq& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cross-correlation needs equal lengths");
  const std::size_t n = a.size();
  std::vector<std::int64_t> r(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t kw = k + w;
      if (kw >= n) kw -= n;
      acc += std::int64_t{a.v[k]} * b.v[kw];
    }
    r[w] = acc;
  }
  return r;
}

std::vector<std::int64_t> odd_autocorrelation_spectrum(const BinarySeq& phi) {
  const std::size_t n = phi.size();
  std::vector<std::int64_t> r(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t kw = k + w;
      const std::int64_t term = std::int64_t{phi.v[k]} * phi.v[kw % n];
      acc += (kw >= n) ? -term : term;
    }
    r[w] = acc;
  }
  return r;
}

bool is_oqs(const QuaternarySeq& f) {
  const std::size_t m = f.size();
  if (m % 2 == 0)
    throw std::invalid_argument("is_oqs: length must be odd, got " +
                                std::to_string(m));
  const auto spec = autocorrelation_spectrum(f);
  for (std::size_t w = 1; w < m; ++w)
    if (spec[w].norm() != 1) return false;
  // |R(w)| = 1 at every nonzero shift forces R(w) real, hence +-1.
  for (std::size_t w = 1; w < m; ++w)
    if (spec[w].im != 0)
      throw std::logic_error("is_oqs: unit correlation with nonzero imaginary part");
  return true;
}

bool is_optimal_binary(const BinarySeq& phi) {
  const std::size_t n = phi.size();
  if (n < 2) throw std::invalid_argument("is_optimal_binary: need n >= 2");
  const auto spec = autocorrelation_spectrum(phi);
  for (std::size_t w = 1; w < n; ++w) {
    const std::int64_t r = spec[w].re;
    bool ok = false;
    switch (n % 4) {
      case 0: ok = (r == 0 || r == 4 || r == -4); break;
      case 1: ok = (r == 1 || r == -3); break;
      case 2: ok = (r == 2 || r == -2); break;
      default: ok = (r == -1); break;
    }
    if (!ok) return false;
  }
  return true;
}

std::int64_t difference_counts_of_support(const BinarySeq& phi,
                                          std::int64_t shift) {
  const std::int64_t n = static_cast<std::int64_t>(phi.size());
  const std::int64_t x = ((shift % n) + n) % n;
  std::int64_t d = 0;
  for (std::int64_t k = 0; k < n; ++k)
    if (phi.v[k] == -1 && phi.v[(k + n - x) % n] == -1) ++d;
  return d;
}

}  // namespace optseq
