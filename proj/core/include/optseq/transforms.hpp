#ifndef OPTSEQ_TRANSFORMS_HPP
#define OPTSEQ_TRANSFORMS_HPP

#include "optseq/arrays.hpp"
#include "optseq/seq.hpp"

namespace optseq {

/// A binary (2,m)-array phi, kept as its two rows phi(0,-) and phi(1,-).
struct GrayPair {
  BinarySeq row0;
  BinarySeq row1;

  GrayPair() = default;
  GrayPair(BinarySeq r0, BinarySeq r1);

  std::size_t length() const { return row0.size(); }
  friend bool operator==(const GrayPair&, const GrayPair&) = default;
};

/// The bijection between quaternary sequences f and binary (2,m)-arrays:
///   phi(0,k) = Re f(k) - Im f(k),   phi(1,k) = Re f(k) + Im f(k),
/// equivalently f(k) = i^g where g is the inverse Gray code of the bit pair
/// ((1-phi(1,k))/2, (1-phi(0,k))/2).
GrayPair quat_to_array(const QuaternarySeq& f);
QuaternarySeq array_to_quat(const GrayPair& phi);

/// The length-2m sequence <-> (2,m)-array identification that matches
/// |R| spectra of the respective expansions.  The case split is on the
/// canonical representative k in {0..m-1} taken mod 4, with sequence indices
/// read mod 2m; m must be odd and > 1.
GrayPair sequence_to_array(const BinarySeq& varphi);
BinarySeq array_to_sequence(const GrayPair& phi);

/// The same array as a dense (2,m) BinaryArray (row a = 0 first).
BinaryArray to_binary_array(const GrayPair& phi);
GrayPair from_binary_array(const BinaryArray& arr);

}  // namespace optseq

#endif
