#include "optseq/search.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <thread>

namespace optseq {

namespace {

std::uint64_t pow4(int m) { return std::uint64_t{1} << (2 * m); }

int clamp_jobs(int jobs, std::uint64_t work) {
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > work)
    jobs = static_cast<int>(work > 0 ? work : 1);
  return jobs;
}

// |R(w)|^2 = 1 for all shifts w = 1..(m-1)/2; the upper half is determined
// by R(m-w) = conj(R(w)).
bool unit_correlations(const std::uint8_t* e, int m) {
  for (int w = 1; w <= (m - 1) / 2; ++w) {
    int re = 0, im = 0;
    for (int k = 0; k < m; ++k) {
      int kw = k + w;
      if (kw >= m) kw -= m;
      switch ((e[k] - e[kw]) & 3) {
        case 0: ++re; break;
        case 1: ++im; break;
        case 2: --re; break;
        default: --im; break;
      }
    }
    if (re * re + im * im != 1) return false;
  }
  return true;
}

// Odometer step through exponent digits, most significant digit first.
void bump_digits(std::uint8_t* e, int m) {
  for (int k = m - 1; k >= 0; --k) {
    if (++e[k] < 4) return;
    e[k] = 0;
  }
}

}  // namespace

std::uint64_t encode_base4(const QuaternarySeq& f) {
  std::uint64_t code = 0;
  for (std::uint8_t x : f.e) code = (code << 2) | x;
  return code;
}

QuaternarySeq decode_base4(int m, std::uint64_t code) {
  std::vector<std::uint8_t> e(m);
  for (int k = m - 1; k >= 0; --k) {
    e[k] = static_cast<std::uint8_t>(code & 3u);
    code >>= 2;
  }
  return QuaternarySeq(std::move(e));
}

std::uint64_t canonical_code(const QuaternarySeq& f) {
  const int m = static_cast<int>(f.size());
  std::uint64_t best = ~std::uint64_t{0};
  for (int conj = 0; conj < 2; ++conj) {
    for (int s = 0; s < m; ++s) {
      // Exponents of conj^a(f) shifted by s, before the global unit.
      std::uint64_t base = 0;
      for (int k = 0; k < m; ++k) {
        int x = f.e[(k + s) % m];
        if (conj) x = -x;
        base = (base << 2) | static_cast<std::uint64_t>(x & 3);
      }
      for (std::uint64_t c = 0; c < 4; ++c) {
        std::uint64_t code = 0;
        for (int k = 0; k < m; ++k) {
          const std::uint64_t digit = (base >> (2 * (m - 1 - k))) & 3u;
          code = (code << 2) | ((digit + c) & 3u);
        }
        best = std::min(best, code);
      }
    }
  }
  return best;
}

std::vector<OqsRecord> search_oqs(int m, const OqsSearchOptions& opts) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("search_oqs: m must be odd and >= 1");
  if (m > 31 || pow4(m) > opts.budget)
    throw std::invalid_argument("search_oqs: enumeration budget exceeded");

  const std::uint64_t total = pow4(m);
  const int jobs = clamp_jobs(opts.jobs, total);

  // Fixed prefix blocks, each a contiguous code range; workers take blocks
  // round-robin and block results are concatenated in block order, so the
  // output never depends on scheduling.
  int prefix_digits = 0;
  while ((std::uint64_t{1} << (2 * prefix_digits)) < 4 * static_cast<std::uint64_t>(jobs) &&
         prefix_digits < m)
    ++prefix_digits;
  const std::uint64_t nblocks = std::uint64_t{1} << (2 * prefix_digits);
  const std::uint64_t block_size = total >> (2 * prefix_digits);

  std::vector<std::vector<std::uint64_t>> found(nblocks);
  auto worker = [&](int id) {
    std::vector<std::uint8_t> e(m);
    for (std::uint64_t blk = id; blk < nblocks; blk += jobs) {
      const std::uint64_t lo = blk * block_size;
      const std::uint64_t hi = lo + block_size;
      QuaternarySeq seed = decode_base4(m, lo);
      std::copy(seed.e.begin(), seed.e.end(), e.begin());
      for (std::uint64_t code = lo; code < hi; ++code, bump_digits(e.data(), m)) {
        if (unit_correlations(e.data(), m)) found[blk].push_back(code);
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  std::vector<OqsRecord> out;
  for (std::uint64_t blk = 0; blk < nblocks; ++blk) {
    for (std::uint64_t code : found[blk]) {
      QuaternarySeq f = decode_base4(m, code);
      const bool canonical = canonical_code(f) == code;
      if (opts.canonicalize && !canonical) continue;
      out.push_back(OqsRecord{f, autocorrelation_spectrum(f), canonical});
    }
  }
  return out;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) /
                                    static_cast<std::uint64_t>(i);
  return r;
}

// All k-subsets of {0..m-1} as ascending bitmasks.
std::vector<std::uint32_t> subsets_of_size(int m, int k) {
  std::vector<std::uint32_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = std::uint32_t{1} << m;
  while (mask < limit) {
    out.push_back(mask);
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::vector<int> mask_to_subset(std::uint32_t mask) {
  std::vector<int> out;
  for (int j = 0; mask; ++j, mask >>= 1)
    if (mask & 1u) out.push_back(j);
  return out;
}

}  // namespace

std::vector<AsdsRecord> search_asds(int m, const AsdsSearchOptions& opts) {
  if (m < 1 || m > 31)
    throw std::invalid_argument("search_asds: need 1 <= m <= 31");
  std::vector<int> k1s, k2s;
  for (int k = 0; k <= m; ++k) {
    if (!opts.k1 || *opts.k1 == k) k1s.push_back(k);
    if (!opts.k2 || *opts.k2 == k) k2s.push_back(k);
  }
  if (k1s.empty() || k2s.empty())
    throw std::invalid_argument("search_asds: subset size out of range");

  std::uint64_t work = 0;
  for (int k1 : k1s)
    for (int k2 : k2s) work += binomial(m, k1) * binomial(m, k2);
  if (work > opts.budget)
    throw std::invalid_argument("search_asds: enumeration budget exceeded");

  std::vector<AsdsRecord> out;
  for (int k1 : k1s) {
    const auto bs = subsets_of_size(m, k1);
    for (int k2 : k2s) {
      const auto ds = subsets_of_size(m, k2);
      const int jobs = clamp_jobs(opts.jobs, bs.size());
      std::vector<std::vector<AsdsRecord>> partial(bs.size());
      auto worker = [&](int id) {
        for (std::size_t bi = id; bi < bs.size(); bi += jobs) {
          for (std::uint32_t dmask : ds) {
            SubsetPair pair(m, mask_to_subset(bs[bi]), mask_to_subset(dmask));
            auto params = classify(pair);
            if (!params) continue;
            if (opts.mu && params->mu != *opts.mu) continue;
            const bool sym = symmetric_difference_check(pair);
            if (opts.symmetric_only && !sym) continue;
            partial[bi].push_back(
                AsdsRecord{pair, *params, sym, difference_counts(pair)});
          }
        }
      };
      if (jobs == 1) {
        worker(0);
      } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
      }
      for (auto& chunk : partial)
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
  }
  return out;
}

std::int64_t brute_force_optimum(int n, Alphabet alphabet, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("brute_force_optimum: need n >= 1");
  if (n == 1) return 0;
  const bool quaternary = alphabet == Alphabet::quaternary;
  if (n > 31 || (quaternary ? pow4(n) : (std::uint64_t{1} << n)) > budget)
    throw std::invalid_argument("brute_force_optimum: enumeration budget exceeded");

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  if (quaternary) {
    std::vector<std::uint8_t> e(n, 0);
    const std::uint64_t total = pow4(n);
    for (std::uint64_t code = 0; code < total; ++code, bump_digits(e.data(), n)) {
      std::int64_t peak = 0;
      for (int w = 1; w <= n / 2 && peak < best; ++w) {
        std::int64_t re = 0, im = 0;
        for (int k = 0; k < n; ++k) {
          int kw = k + w;
          if (kw >= n) kw -= n;
          switch ((e[k] - e[kw]) & 3) {
            case 0: ++re; break;
            case 1: ++im; break;
            case 2: --re; break;
            default: --im; break;
          }
        }
        peak = std::max(peak, re * re + im * im);
      }
      best = std::min(best, peak);
      if (best == 0) break;
    }
  } else {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      std::int64_t peak = 0;
      for (int w = 1; w <= n / 2 && peak < best; ++w) {
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k) {
          int kw = k + w;
          if (kw >= n) kw -= n;
          const bool diff = ((bits >> k) ^ (bits >> kw)) & 1u;
          acc += diff ? -1 : 1;
        }
        peak = std::max(peak, acc < 0 ? -acc : acc);
      }
      best = std::min(best, peak);
      if (best == 0) break;
    }
  }
  return best;
}

}  // namespace optseq
