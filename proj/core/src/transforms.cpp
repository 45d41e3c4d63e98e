#include "optseq/transforms.hpp"

#include <stdexcept>

namespace optseq {

GrayPair::GrayPair(BinarySeq r0, BinarySeq r1)
    : row0(std::move(r0)), row1(std::move(r1)) {
  if (row0.size() != row1.size())
    throw std::invalid_argument("GrayPair rows must have equal length");
}

GrayPair quat_to_array(const QuaternarySeq& f) {
  const std::size_t m = f.size();
  std::vector<std::int8_t> r0(m), r1(m);
  for (std::size_t k = 0; k < m; ++k) {
    const GaussianInt u = f.value(k);
    r0[k] = static_cast<std::int8_t>(u.re - u.im);
    r1[k] = static_cast<std::int8_t>(u.re + u.im);
  }
  return {BinarySeq(std::move(r0)), BinarySeq(std::move(r1))};
}

QuaternarySeq array_to_quat(const GrayPair& phi) {
  const std::size_t m = phi.length();
  std::vector<std::uint8_t> e(m);
  for (std::size_t k = 0; k < m; ++k) {
    const bool b1 = phi.row1.v[k] == -1;
    const bool b0 = phi.row0.v[k] == -1;
    // inverse Gray code of (b1, b0): 00->0, 01->1, 11->2, 10->3
    e[k] = static_cast<std::uint8_t>(b1 ? (b0 ? 2 : 3) : (b0 ? 1 : 0));
  }
  return QuaternarySeq(std::move(e));
}

namespace {

struct Cell {
  std::size_t idx;  // position in the length-2m sequence
  int sign;
};

// The published case table: phi(a,k) = sign * varphi(idx).  The branch is on
// the representative k in {0..m-1} mod 4; indices are reduced mod 2m.
Cell lemma_cell(std::size_t m, int a, std::size_t k) {
  const std::size_t off_a = k + static_cast<std::size_t>(a) * m;
  const std::size_t off_na = k + static_cast<std::size_t>(1 - a) * m;
  Cell c{};
  if (m % 4 == 1) {
    switch (k % 4) {
      case 0: c = {off_a, +1}; break;
      case 1: c = {off_na, a == 1 ? +1 : -1}; break;  // (-1)^(1-a)
      case 2: c = {off_a, -1}; break;
      default: c = {off_na, a == 0 ? +1 : -1}; break;  // (-1)^a
    }
  } else {
    switch (k % 4) {
      case 0: c = {off_a, a == 0 ? +1 : -1}; break;    // (-1)^a
      case 1: c = {off_na, +1}; break;
      case 2: c = {off_a, a == 1 ? +1 : -1}; break;    // (-1)^(1-a)
      default: c = {off_na, -1}; break;
    }
  }
  c.idx %= 2 * m;
  return c;
}

std::size_t half_length_checked(std::size_t n) {
  if (n % 2 != 0 || (n / 2) % 2 != 1 || n / 2 == 1)
    throw std::invalid_argument(
        "sequence/array correspondence needs length 2m with m odd, m > 1");
  return n / 2;
}

}  // namespace

GrayPair sequence_to_array(const BinarySeq& varphi) {
  const std::size_t m = half_length_checked(varphi.size());
  std::vector<std::int8_t> r0(m), r1(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Cell c0 = lemma_cell(m, 0, k);
    const Cell c1 = lemma_cell(m, 1, k);
    r0[k] = static_cast<std::int8_t>(c0.sign * varphi.v[c0.idx]);
    r1[k] = static_cast<std::int8_t>(c1.sign * varphi.v[c1.idx]);
  }
  return {BinarySeq(std::move(r0)), BinarySeq(std::move(r1))};
}

BinarySeq array_to_sequence(const GrayPair& phi) {
  const std::size_t m = phi.length();
  if (m % 2 != 1 || m == 1)
    throw std::invalid_argument(
        "sequence/array correspondence needs m odd, m > 1");
  std::vector<std::int8_t> out(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const Cell c0 = lemma_cell(m, 0, k);
    const Cell c1 = lemma_cell(m, 1, k);
    out[c0.idx] = static_cast<std::int8_t>(c0.sign * phi.row0.v[k]);
    out[c1.idx] = static_cast<std::int8_t>(c1.sign * phi.row1.v[k]);
  }
  return BinarySeq(std::move(out));
}

BinaryArray to_binary_array(const GrayPair& phi) {
  const int m = static_cast<int>(phi.length());
  std::vector<std::int8_t> v(phi.row0.v);
  v.insert(v.end(), phi.row1.v.begin(), phi.row1.v.end());
  return BinaryArray(Shape({2, m}), std::move(v));
}

GrayPair from_binary_array(const BinaryArray& arr) {
  if (arr.shape.rank() != 2 || arr.shape.dims[0] != 2)
    throw std::invalid_argument("expected a (2,m) array");
  const std::size_t m = static_cast<std::size_t>(arr.shape.dims[1]);
  std::vector<std::int8_t> r0(arr.v.begin(), arr.v.begin() + m);
  std::vector<std::int8_t> r1(arr.v.begin() + m, arr.v.end());
  return {BinarySeq(std::move(r0)), BinarySeq(std::move(r1))};
}

}  // namespace optseq
