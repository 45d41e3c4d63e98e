#include "optseq/cocycles.hpp"

#include <bit>
#include <stdexcept>

namespace optseq {

namespace {

constexpr int kMaxM = 31;  // keeps 2m rows inside one 64-bit word

void check_m(int m) {
  if (m < 3 || m % 2 == 0 || m > kMaxM)
    throw std::invalid_argument("cocycle group needs odd m with 3 <= m <= 31");
}

void check_phi(const GroupZ2m& g, std::span<const std::int8_t> phi) {
  if (static_cast<int>(phi.size()) != g.order())
    throw std::invalid_argument("map size must equal |G| = 2m");
  if (phi[0] != 1)
    throw std::invalid_argument("map must be normalized: phi(1_G) = +1");
  for (std::int8_t s : phi)
    if (s != 1 && s != -1)
      throw std::invalid_argument("map values must be +1 or -1");
}

}  // namespace

GroupZ2m::GroupZ2m(int m_) : m(m_) { check_m(m); }

Cocycle::Cocycle(int m_, bool lambda, std::uint64_t mask)
    : m(m_), lambda_flag(lambda), delta_mask(mask) {
  check_m(m);
  if (mask >> (2 * m - 2))
    throw std::invalid_argument("delta_mask has bits outside 2..2m-1");
}

std::vector<int> Cocycle::delta_indices() const {
  std::vector<int> out;
  for (int i = 2; i <= 2 * m - 1; ++i)
    if ((delta_mask >> (i - 2)) & 1u) out.push_back(i);
  return out;
}

Cocycle Cocycle::from_delta_indices(int m, bool lambda,
                                    const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 2 || i > 2 * m - 1)
      throw std::invalid_argument("basis index out of range 2..2m-1");
    mask |= std::uint64_t{1} << (i - 2);
  }
  return Cocycle(m, lambda, mask);
}

std::int64_t CocyclicMatrix::row_sum(int r) const {
  const std::uint64_t mask =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return n - 2 * std::popcount(rows[r] & mask);
}

CocyclicMatrix coboundary_of(const GroupZ2m& g, std::span<const std::int8_t> phi) {
  check_phi(g, phi);
  const int n = g.order();
  CocyclicMatrix mat{n, std::vector<std::uint64_t>(n, 0)};
  std::uint64_t neg = 0;  // bit x set iff phi(g_{x+1}) = -1
  for (int x = 0; x < n; ++x)
    if (phi[x] == -1) neg |= std::uint64_t{1} << x;
  for (int r = 0; r < n; ++r) {
    std::uint64_t row = 0;
    const std::uint64_t pr = (neg >> r) & 1u;
    for (int c = 0; c < n; ++c) {
      const std::uint64_t bit =
          pr ^ ((neg >> c) & 1u) ^ ((neg >> g.mul(r, c)) & 1u);
      row |= bit << c;
    }
    mat.rows[r] = row;
  }
  return mat;
}

std::uint64_t coboundary_exponents(std::span<const std::int8_t> phi) {
  std::uint64_t e = 0;
  for (std::size_t idx = 1; idx < phi.size(); ++idx)
    if (phi[idx] == -1) e |= std::uint64_t{1} << (idx - 1);  // bit (i-2), i = idx+1
  return e;
}

Cocycle coboundary_cocycle(const GroupZ2m& g, std::span<const std::int8_t> phi) {
  check_phi(g, phi);
  const int m = g.m;
  std::uint64_t e = coboundary_exponents(phi);
  const std::uint64_t top = std::uint64_t{1} << (2 * m - 2);  // e_{2m}
  if (e & top) {
    // d_{2m} = d_{m+1} ... d_{2m-1}: flip the upper-half exponents.
    const std::uint64_t upper = ((std::uint64_t{1} << (m - 1)) - 1) << (m - 1);
    e = (e ^ upper) & ~top;
  }
  return Cocycle(m, false, e);
}

CocyclicMatrix lambda_matrix(int m) {
  check_m(m);
  const int n = 2 * m;
  CocyclicMatrix mat{n, std::vector<std::uint64_t>(n, 0)};
  const std::uint64_t lower = ((std::uint64_t{1} << m) - 1) << m;
  for (int r = m; r < n; ++r) mat.rows[r] = lower;
  return mat;
}

CocyclicMatrix basis_matrix(int m, int i) {
  check_m(m);
  if (i < 2 || i > 2 * m)
    throw std::invalid_argument("basis index out of range 2..2m");
  const int n = 2 * m;
  const bool upper_block = i > m;       // [[J, C], [C, J]] shape
  const int pos = (upper_block ? i - m : i) - 1;  // 0-based circulant position
  CocyclicMatrix raw{n, std::vector<std::uint64_t>(n, 0)};
  for (int r = 0; r < n; ++r) {
    const bool rlow = r < m;
    std::uint64_t row = 0;
    for (int c = 0; c < n; ++c) {
      const bool clow = c < m;
      const bool in_circulant = upper_block ? (rlow != clow) : (rlow == clow);
      if (in_circulant && (r % m + c % m) % m == pos) row |= std::uint64_t{1} << c;
    }
    raw.rows[r] = row;
  }
  // Normalize: negate rows/columns until row 1 and column 1 are all +1.
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  CocyclicMatrix mat{n, std::vector<std::uint64_t>(n, 0)};
  for (int r = 0; r < n; ++r) {
    const std::uint64_t rbit = (raw.rows[r] >> 0) & 1u;
    mat.rows[r] = raw.rows[r] ^ raw.rows[0] ^ (rbit ? full : 0);
  }
  return mat;
}

CocyclicMatrix cocycle_matrix(const Cocycle& psi) {
  const GroupZ2m g(psi.m);
  const int n = g.order();
  // Sign vector of the product delta map: bit x set iff it sends g_{x+1} to -1.
  const std::uint64_t neg = psi.delta_mask << 1;
  CocyclicMatrix mat{n, std::vector<std::uint64_t>(n, 0)};
  for (int r = 0; r < n; ++r) {
    std::uint64_t row = 0;
    const std::uint64_t pr = (neg >> r) & 1u;
    for (int c = 0; c < n; ++c) {
      std::uint64_t bit = pr ^ ((neg >> c) & 1u) ^ ((neg >> g.mul(r, c)) & 1u);
      if (psi.lambda_flag && g.lambda_negative(r, c)) bit ^= 1u;
      row |= bit << c;
    }
    mat.rows[r] = row;
  }
  return mat;
}

std::int64_t row_excess(const CocyclicMatrix& mat) {
  std::int64_t e = 0;
  for (int r = 1; r < mat.n; ++r) {
    const std::int64_t s = mat.row_sum(r);
    e += s < 0 ? -s : s;
  }
  return e;
}

bool is_quasi_orthogonal(const Cocycle& psi) {
  const std::int64_t target = psi.lambda_flag ? 2 * psi.m - 2 : 4 * psi.m - 2;
  return row_excess(cocycle_matrix(psi)) == target;
}

Cocycle cocycle_from_array(const GrayPair& phi) {
  const int m = static_cast<int>(phi.length());
  check_m(m);
  if (phi.row0.v[0] != 1)
    throw std::invalid_argument("array must be normalized: phi(0,0) = +1");
  std::vector<std::int8_t> map(phi.row0.v);
  map.insert(map.end(), phi.row1.v.begin(), phi.row1.v.end());
  Cocycle c = coboundary_cocycle(GroupZ2m(m), map);
  c.lambda_flag = true;
  return c;
}

bool satisfies_cocycle_identity(const GroupZ2m& g, const CocyclicMatrix& mat) {
  const int n = g.order();
  if (mat.n != n) throw std::invalid_argument("matrix size must equal |G|");
  auto bit = [&](int r, int c) -> unsigned {
    return (mat.rows[r] >> c) & 1u;
  };
  if (bit(0, 0)) return false;  // psi(1,1) = 1
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z) {
        if ((bit(x, y) ^ bit(xy, z)) != (bit(x, g.mul(y, z)) ^ bit(y, z)))
          return false;
      }
    }
  return true;
}

}  // namespace optseq
