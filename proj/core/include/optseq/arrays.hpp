#ifndef OPTSEQ_ARRAYS_HPP
#define OPTSEQ_ARRAYS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "optseq/seq.hpp"

namespace optseq {

/// Dimensions s = (s_1, ..., s_r) of the index group Z_{s1} x ... x Z_{sr}.
struct Shape {
  std::vector<int> dims;

  Shape() = default;
  explicit Shape(std::vector<int> d);

  int rank() const { return static_cast<int>(dims.size()); }
  std::size_t count() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// One bit per dimension; z_i = 1 doubles dimension i in the expansion.
using TypeVector = std::vector<int>;

/// Mixed-radix index helper for a product of cyclic groups, with cached
/// addition/negation tables driving the correlation loops.
class GroupIndex {
 public:
  explicit GroupIndex(Shape shape);

  std::size_t size() const { return n_; }
  const Shape& shape() const { return shape_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }

  std::size_t linear(std::span<const int> coords) const;
  std::vector<int> coords(std::size_t idx) const;

 private:
  Shape shape_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

/// A +/-1 valued map on Z_{s1} x ... x Z_{sr}, stored dense in row-major
/// order (last coordinate fastest).
struct BinaryArray {
  Shape shape;
  std::vector<std::int8_t> v;

  BinaryArray() = default;
  BinaryArray(Shape s, std::vector<std::int8_t> vals);

  std::size_t size() const { return v.size(); }
  friend bool operator==(const BinaryArray&, const BinaryArray&) = default;
};

/// Precomputed machinery for expanding arrays of one shape with respect to
/// one type vector: the expanded group E, the projection E -> G, the +/- sign
/// of each lift, and the subgroups H (lifts of 0) and K (even-weight half).
/// Building the plan once and reusing it is what keeps the exhaustive suites
/// fast.
struct ExpansionPlan {
  GroupIndex base;
  GroupIndex ext;
  TypeVector z;
  std::vector<std::uint32_t> proj;  // E index -> G index of x~
  std::vector<std::int8_t> sign;    // +1 if x in x~ + K, else -1
  std::vector<std::size_t> h;       // elements of H (linear indices in E)
  std::vector<std::size_t> k;       // elements of K
};

ExpansionPlan make_expansion_plan(const Shape& shape, const TypeVector& z);

/// Expansion phi' of a binary array: phi'(x) = phi(x~) if x in x~ + K, else
/// -phi(x~), where x~ reduces each coordinate mod s_i (representatives
/// 0 <= x~_i < s_i).
struct ExpandedArray {
  BinaryArray arr;             // values over E = Z_{(z1+1)s1} x ...
  std::vector<std::size_t> h;
  std::vector<std::size_t> k;
};

ExpandedArray expand(const BinaryArray& phi, const TypeVector& z);
void expand_values(const ExpansionPlan& plan, std::span<const std::int8_t> base,
                   std::vector<std::int8_t>& out);

/// Full periodic autocorrelation table R(x) = sum_b v(b) * v(x+b) over the
/// index group, one entry per group element in row-major order.
std::vector<std::int64_t> autocorrelation_table(const GroupIndex& g,
                                                std::span<const std::int8_t> values);
std::vector<std::int64_t> autocorrelation_table(const BinaryArray& phi);

/// Generalized perfect binary array: R_{phi'}(x) = 0 for all x in E \ H.
bool is_gpba(const BinaryArray& phi, const TypeVector& z);
bool is_gpba(const ExpansionPlan& plan, std::span<const std::int8_t> values);

/// Generalized optimal binary array of type z (requires |G| = 2 mod 4, i.e.
/// s_1 even with s_1/2 odd and s_2..s_r odd; throws otherwise):
///   - R_{phi'}(x) in {0, +-2|H|} for all x in E \ H, and
///   - |{x in E : R_{phi'}(x) = 0}| = |E|/2 when z_1 = 1.
/// When z_1 = 0 only the first condition is applied.
bool is_goba(const BinaryArray& phi, const TypeVector& z);
bool is_goba(const ExpansionPlan& plan, std::span<const std::int8_t> values);

/// GOBS = the r = 1, z = (1) case of GOBA on a sequence of length 2m, m odd.
bool is_gobs(const BinarySeq& varphi);

/// d_phi(x) = |N ∩ (x + N)| for N = support of -1, x given by coordinates.
std::int64_t difference_counts_of_support(const BinaryArray& phi,
                                          std::span<const int> x);

/// View a +/-1 sequence as a 1-dimensional array.
BinaryArray as_array(const BinarySeq& phi);

}  // namespace optseq

#endif
