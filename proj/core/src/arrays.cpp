#include "optseq/arrays.hpp"

#include <algorithm>
#include <stdexcept>

namespace optseq {

Shape::Shape(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw std::invalid_argument("shape must have rank >= 1");
  for (int s : dims)
    if (s <= 1) throw std::invalid_argument("shape dimensions must be > 1");
  if (count() > kMaxLength)
    throw std::invalid_argument("array larger than 2^20 not supported");
}

std::size_t Shape::count() const {
  std::size_t n = 1;
  for (int s : dims) n *= static_cast<std::size_t>(s);
  return n;
}

GroupIndex::GroupIndex(Shape shape) : shape_(std::move(shape)) {
  n_ = shape_.count();
  const int r = shape_.rank();
  add_.resize(n_ * n_);
  neg_.resize(n_);
  std::vector<int> a(r, 0), b(r, 0), t(r);
  auto bump = [&](std::vector<int>& c) {
    for (int i = r - 1; i >= 0; --i) {
      if (++c[i] < shape_.dims[i]) return;
      c[i] = 0;
    }
  };
  for (std::size_t ai = 0; ai < n_; ++ai, bump(a)) {
    for (int i = 0; i < r; ++i) t[i] = a[i] == 0 ? 0 : shape_.dims[i] - a[i];
    neg_[ai] = static_cast<std::uint32_t>(linear(t));
    std::fill(b.begin(), b.end(), 0);
    for (std::size_t bi = 0; bi < n_; ++bi, bump(b)) {
      for (int i = 0; i < r; ++i) {
        int s = a[i] + b[i];
        if (s >= shape_.dims[i]) s -= shape_.dims[i];
        t[i] = s;
      }
      add_[ai * n_ + bi] = static_cast<std::uint32_t>(linear(t));
    }
  }
}

std::size_t GroupIndex::linear(std::span<const int> coords) const {
  std::size_t idx = 0;
  for (int i = 0; i < shape_.rank(); ++i)
    idx = idx * static_cast<std::size_t>(shape_.dims[i]) +
          static_cast<std::size_t>(coords[i]);
  return idx;
}

std::vector<int> GroupIndex::coords(std::size_t idx) const {
  const int r = shape_.rank();
  std::vector<int> c(r);
  for (int i = r - 1; i >= 0; --i) {
    c[i] = static_cast<int>(idx % static_cast<std::size_t>(shape_.dims[i]));
    idx /= static_cast<std::size_t>(shape_.dims[i]);
  }
  return c;
}

BinaryArray::BinaryArray(Shape s, std::vector<std::int8_t> vals)
    : shape(std::move(s)), v(std::move(vals)) {
  if (v.size() != shape.count())
    throw std::invalid_argument("array value count does not match shape");
  for (std::int8_t x : v)
    if (x != 1 && x != -1)
      throw std::invalid_argument("array entries must be +1 or -1");
}

ExpansionPlan make_expansion_plan(const Shape& shape, const TypeVector& z) {
  const int r = shape.rank();
  if (static_cast<int>(z.size()) != r)
    throw std::invalid_argument("type vector rank mismatch");
  for (int b : z)
    if (b != 0 && b != 1)
      throw std::invalid_argument("type vector entries must be 0 or 1");

  std::vector<int> edims(shape.dims);
  for (int i = 0; i < r; ++i) edims[i] *= z[i] + 1;

  ExpansionPlan plan{GroupIndex(shape), GroupIndex(Shape(std::move(edims))), z,
                     {}, {}, {}, {}};
  const std::size_t en = plan.ext.size();
  plan.proj.resize(en);
  plan.sign.resize(en);
  std::vector<int> xt;
  for (std::size_t x = 0; x < en; ++x) {
    xt = plan.ext.coords(x);
    int wrapped = 0;  // weight of x - x~ as an element of H
    for (int i = 0; i < r; ++i) {
      if (xt[i] >= shape.dims[i]) {
        xt[i] -= shape.dims[i];
        ++wrapped;
      }
    }
    plan.proj[x] = static_cast<std::uint32_t>(plan.base.linear(xt));
    plan.sign[x] = (wrapped % 2 == 0) ? std::int8_t{1} : std::int8_t{-1};
  }

  // H = the 2^weight(z) lifts of 0; K = its even-weight half.
  std::vector<int> hc(r, 0);
  const int zbits = static_cast<int>(std::count(z.begin(), z.end(), 1));
  for (std::size_t pat = 0; pat < (std::size_t{1} << zbits); ++pat) {
    std::size_t bit = 0;
    int weight = 0;
    for (int i = 0; i < r; ++i) {
      hc[i] = 0;
      if (z[i] == 1) {
        if ((pat >> bit) & 1u) {
          hc[i] = shape.dims[i];
          ++weight;
        }
        ++bit;
      }
    }
    const std::size_t idx = plan.ext.linear(hc);
    plan.h.push_back(idx);
    if (weight % 2 == 0) plan.k.push_back(idx);
  }
  std::sort(plan.h.begin(), plan.h.end());
  std::sort(plan.k.begin(), plan.k.end());
  return plan;
}

void expand_values(const ExpansionPlan& plan, std::span<const std::int8_t> base,
                   std::vector<std::int8_t>& out) {
  if (base.size() != plan.base.size())
    throw std::invalid_argument("value count does not match plan shape");
  out.resize(plan.ext.size());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = static_cast<std::int8_t>(plan.sign[x] * base[plan.proj[x]]);
}

ExpandedArray expand(const BinaryArray& phi, const TypeVector& z) {
  ExpansionPlan plan = make_expansion_plan(phi.shape, z);
  std::vector<std::int8_t> ev;
  expand_values(plan, phi.v, ev);
  return ExpandedArray{BinaryArray(plan.ext.shape(), std::move(ev)),
                       std::move(plan.h), std::move(plan.k)};
}

std::vector<std::int64_t> autocorrelation_table(const GroupIndex& g,
                                                std::span<const std::int8_t> values) {
  const std::size_t n = g.size();
  if (values.size() != n)
    throw std::invalid_argument("value count does not match group order");
  std::vector<std::int64_t> r(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t acc = 0;
    for (std::size_t b = 0; b < n; ++b)
      acc += std::int64_t{values[b]} * values[g.add(x, b)];
    r[x] = acc;
  }
  return r;
}

std::vector<std::int64_t> autocorrelation_table(const BinaryArray& phi) {
  GroupIndex g(phi.shape);
  return autocorrelation_table(g, phi.v);
}

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void check_goba_shape(const Shape& shape) {
  const auto& dims = shape.dims;
  if (dims[0] % 2 != 0 || (dims[0] / 2) % 2 != 1)
    throw std::invalid_argument("is_goba: s_1 must be even with s_1/2 odd");
  for (int i = 1; i < shape.rank(); ++i)
    if (dims[i] % 2 != 1)
      throw std::invalid_argument("is_goba: s_2..s_r must be odd");
}

}  // namespace

bool is_gpba(const ExpansionPlan& plan, std::span<const std::int8_t> values) {
  std::vector<std::int8_t> ev;
  expand_values(plan, values, ev);
  const auto r = autocorrelation_table(plan.ext, ev);
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r[x] != 0 && !contains(plan.h, x)) return false;
  return true;
}

bool is_gpba(const BinaryArray& phi, const TypeVector& z) {
  return is_gpba(make_expansion_plan(phi.shape, z), phi.v);
}

bool is_goba(const ExpansionPlan& plan, std::span<const std::int8_t> values) {
  check_goba_shape(plan.base.shape());
  std::vector<std::int8_t> ev;
  expand_values(plan, values, ev);
  const auto r = autocorrelation_table(plan.ext, ev);
  const std::int64_t peak = 2 * static_cast<std::int64_t>(plan.h.size());
  std::size_t zeros = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r[x] == 0) {
      ++zeros;
      continue;
    }
    if (r[x] != peak && r[x] != -peak && !contains(plan.h, x)) return false;
  }
  if (plan.z[0] == 1 && zeros != r.size() / 2) return false;
  return true;
}

bool is_goba(const BinaryArray& phi, const TypeVector& z) {
  check_goba_shape(phi.shape);
  return is_goba(make_expansion_plan(phi.shape, z), phi.v);
}

bool is_gobs(const BinarySeq& varphi) {
  return is_goba(as_array(varphi), TypeVector{1});
}

std::int64_t difference_counts_of_support(const BinaryArray& phi,
                                          std::span<const int> x) {
  GroupIndex g(phi.shape);
  const std::size_t nx = g.neg(g.linear(x));
  std::int64_t d = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (phi.v[a] == -1 && phi.v[g.add(a, nx)] == -1) ++d;
  return d;
}

BinaryArray as_array(const BinarySeq& phi) {
  return BinaryArray(Shape({static_cast<int>(phi.size())}), phi.v);
}

}  // namespace optseq
