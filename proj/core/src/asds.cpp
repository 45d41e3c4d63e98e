#include "optseq/asds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace optseq {

namespace {

std::vector<int> reduce_sorted(int m, std::vector<int> xs) {
  for (int& x : xs) x = ((x % m) + m) % m;
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("subset has duplicate residues");
  return xs;
}

std::vector<int> complement_of(int m, const std::vector<int>& xs) {
  std::vector<char> in(m, 0);
  for (int x : xs) in[x] = 1;
  std::vector<int> out;
  out.reserve(m - xs.size());
  for (int x = 0; x < m; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

void add_difference_table(int m, const std::vector<int>& xs,
                          std::vector<std::int64_t>& table) {
  for (int x : xs)
    for (int y : xs) {
      int a = x - y;
      if (a < 0) a += m;
      ++table[a];
    }
}

}  // namespace

SubsetPair::SubsetPair(int m_, std::vector<int> b_, std::vector<int> d_)
    : m(m_) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  b = reduce_sorted(m, std::move(b_));
  d = reduce_sorted(m, std::move(d_));
}

std::vector<std::int64_t> difference_counts(const SubsetPair& pair) {
  std::vector<std::int64_t> table(pair.m, 0);
  add_difference_table(pair.m, pair.b, table);
  add_difference_table(pair.m, pair.d, table);
  return table;
}

std::int64_t subset_difference_count(int m, const std::vector<int>& x, int w) {
  std::vector<std::int64_t> table(m, 0);
  add_difference_table(m, reduce_sorted(m, x), table);
  return table[((w % m) + m) % m];
}

std::optional<AsdsParams> classify(const SubsetPair& pair) {
  const int m = pair.m;
  if (m == 1)  // no nonzero residues: vacuously supplementary
    return AsdsParams{m, pair.k1(), pair.k2(), 0, 0};
  const auto delta = difference_counts(pair);
  std::int64_t lo = delta[1], hi = delta[1];
  for (int a = 2; a < m; ++a) {
    lo = std::min(lo, delta[a]);
    hi = std::max(hi, delta[a]);
  }
  if (lo == hi)  // constant counts: supplementary difference sets
    return AsdsParams{m, pair.k1(), pair.k2(), lo, m - 1};
  if (hi != lo + 1) return std::nullopt;
  int t = 0;
  for (int a = 1; a < m; ++a)
    if (delta[a] == lo) ++t;
  return AsdsParams{m, pair.k1(), pair.k2(), lo, t};
}

bool has_asds_shape(const SubsetPair& pair, std::int64_t mu) {
  const auto delta = difference_counts(pair);
  for (int a = 1; a < pair.m; ++a)
    if (delta[a] != mu && delta[a] != mu + 1) return false;
  return true;
}

bool symmetric_difference_check(const SubsetPair& pair) {
  const int m = pair.m;
  std::vector<std::int64_t> count(m, 0);
  for (int x : pair.b)
    for (int y : pair.d) {
      int a = x - y;
      if (a < 0) a += m;
      ++count[a];
    }
  for (int a = 1; a < m; ++a)
    if (count[a] != count[m - a]) return false;
  return true;
}

std::vector<int> CirculantPM::first_row_subset() const {
  std::vector<int> s;
  for (int j = 0; j < m; ++j)
    if (at(0, j) == -1) s.push_back(j);
  return s;
}

CirculantPM circulant(int m, const std::vector<int>& s) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<char> in(m, 0);
  for (int x : reduce_sorted(m, s)) in[x] = 1;
  CirculantPM c{m, std::vector<std::int8_t>(static_cast<std::size_t>(m) * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int a = j - i;
      if (a < 0) a += m;
      c.v[static_cast<std::size_t>(i) * m + j] = in[a] ? -1 : 1;
    }
  return c;
}

namespace {

bool is_circulant(const CirculantPM& c) {
  if (c.m < 1 || c.v.size() != static_cast<std::size_t>(c.m) * c.m) return false;
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j) {
      int a = j - i;
      if (a < 0) a += c.m;
      if (c.at(i, j) != c.at(0, a)) return false;
    }
  return true;
}

// B^c (B^c)^T + D^c (D^c)^T, dense exact integers.
std::vector<std::int64_t> gram_sum(const CirculantPM& bc, const CirculantPM& dc) {
  const int m = bc.m;
  std::vector<std::int64_t> g(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < m; ++k)
        acc += std::int64_t{bc.at(i, k)} * bc.at(j, k) +
               std::int64_t{dc.at(i, k)} * dc.at(j, k);
      g[static_cast<std::size_t>(i) * m + j] = acc;
    }
  return g;
}

}  // namespace

bool gram_check(const SubsetPair& pair, const AsdsParams& params) {
  const int m = pair.m;
  if (params.m != m || params.k1 != pair.k1() || params.k2 != pair.k2())
    throw std::invalid_argument("gram_check: parameters do not match the pair");
  const auto delta = difference_counts(pair);
  const auto g = gram_sum(circulant(m, pair.b), circulant(m, pair.d));
  const std::int64_t k_plus_r = params.k1 + params.k2;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const std::int64_t got = g[static_cast<std::size_t>(i) * m + j];
      std::int64_t want;
      if (i == j) {
        want = 2 * m;
      } else {
        int a = j - i;
        if (a < 0) a += m;
        const std::int64_t bar_mu = delta[a] == params.mu ? params.mu : params.mu + 1;
        if (delta[a] != params.mu && delta[a] != params.mu + 1) return false;
        want = 2 * m - 4 * (k_plus_r - bar_mu);
      }
      if (got != want) return false;
    }
  return true;
}

std::optional<AsdsParams> gram_to_asds(const CirculantPM& bc, const CirculantPM& dc,
                                       SubsetPair* out) {
  if (bc.m != dc.m || !is_circulant(bc) || !is_circulant(dc)) return std::nullopt;
  for (std::int8_t x : bc.v)
    if (x != 1 && x != -1) return std::nullopt;
  for (std::int8_t x : dc.v)
    if (x != 1 && x != -1) return std::nullopt;
  SubsetPair pair(bc.m, bc.first_row_subset(), dc.first_row_subset());
  auto params = classify(pair);
  if (!params) return std::nullopt;
  if (out) *out = pair;
  return params;
}

std::vector<ComplementVariant> complement_variants(const SubsetPair& pair) {
  if (!classify(pair))
    throw std::invalid_argument("complement_variants: pair is not an ASDS/SDS");
  const int m = pair.m;
  std::vector<ComplementVariant> out;
  const std::vector<SubsetPair> variants = {
      SubsetPair(m, complement_of(m, pair.b), pair.d),
      SubsetPair(m, pair.b, complement_of(m, pair.d)),
      SubsetPair(m, complement_of(m, pair.b), complement_of(m, pair.d))};
  for (const auto& v : variants) {
    auto p = classify(v);
    if (!p)
      throw std::logic_error("complement of an ASDS failed to classify");
    out.push_back(ComplementVariant{v, *p});
  }
  return out;
}

BridgePair bridge_pair_of_array(const GrayPair& phi) {
  const int m = static_cast<int>(phi.length());
  if (m % 2 == 0)
    throw std::invalid_argument("bridge needs odd m");
  std::vector<int> b, d;
  for (int j = 0; j < m; ++j) {
    if (phi.row0.v[j] == -1) b.push_back(j);
    if (phi.row1.v[j] == -1) d.push_back(j);
  }
  const SubsetPair raw(m, b, d);
  const int target = (m + 1) / 2;

  BridgePair out;
  out.symmetric_raw = symmetric_difference_check(raw);
  out.complement_case = 0;
  if (raw.k1() + raw.k2() >= target) {
    out.pair = raw;
  } else if (raw.k1() + (m - raw.k2()) >= target) {
    out.pair = SubsetPair(m, raw.b, complement_of(m, raw.d));
    out.complement_case = 1;
  } else if ((m - raw.k1()) + raw.k2() >= target) {
    out.pair = SubsetPair(m, complement_of(m, raw.b), raw.d);
    out.complement_case = 2;
  } else {
    out.pair = SubsetPair(m, complement_of(m, raw.b), complement_of(m, raw.d));
    out.complement_case = 3;
  }
  out.mu = out.pair.k1() + out.pair.k2() - target;
  out.asds_ok = has_asds_shape(out.pair, out.mu);
  out.symmetric = symmetric_difference_check(out.pair);
  return out;
}

OqsAsdsBridge asds_from_oqs(const QuaternarySeq& f) {
  if (!is_oqs(f))
    throw std::invalid_argument("asds_from_oqs: input is not an OQS");
  const BridgePair bp = bridge_pair_of_array(quat_to_array(f));
  if (!bp.verdict())
    throw std::logic_error("asds_from_oqs: OQS failed to produce symmetric ASDS");
  const auto delta = difference_counts(bp.pair);
  int t = 0;
  for (int a = 1; a < bp.pair.m; ++a)
    if (delta[a] == bp.mu) ++t;
  return OqsAsdsBridge{
      bp.pair,
      AsdsParams{bp.pair.m, bp.pair.k1(), bp.pair.k2(), bp.mu, t},
      bp.symmetric_raw, bp.complement_case};
}

QuaternarySeq oqs_from_asds(const SubsetPair& pair) {
  const int m = pair.m;
  if (m % 2 == 0)
    throw std::invalid_argument("oqs_from_asds: m must be odd");
  const std::int64_t mu = pair.k1() + pair.k2() - (m + 1) / 2;
  if (!has_asds_shape(pair, mu))
    throw std::invalid_argument(
        "oqs_from_asds: difference counts are not {mu, mu+1} for mu = "
        "k1+k2-(m+1)/2 = " + std::to_string(mu));
  if (!symmetric_difference_check(pair))
    throw std::invalid_argument("oqs_from_asds: B - D is not symmetric");
  std::vector<std::int8_t> r0(m, 1), r1(m, 1);
  for (int x : pair.b) r0[x] = -1;
  for (int x : pair.d) r1[x] = -1;
  QuaternarySeq f = array_to_quat({BinarySeq(std::move(r0)), BinarySeq(std::move(r1))});
  if (!is_oqs(f))
    throw std::logic_error("oqs_from_asds: valid ASDS failed to produce an OQS");
  return f;
}

SubsetPair asds_from_cocycle(const Cocycle& psi) {
  if (!psi.lambda_flag)
    throw std::invalid_argument(
        "asds_from_cocycle: cocycle must have the lambda factor");
  const int m = psi.m;
  std::vector<int> b, d;
  for (int i : psi.delta_indices()) {
    if (i <= m)
      b.push_back(i - 1);
    else
      d.push_back(i - m - 1);
  }
  return SubsetPair(m, std::move(b), std::move(d));
}

Cocycle cocycle_from_asds(const SubsetPair& pair) {
  const int m = pair.m;
  std::vector<int> indices;
  for (int x : pair.b) {
    if (x == 0)
      throw std::invalid_argument("cocycle_from_asds: B must not contain 0");
    indices.push_back(x + 1);
  }
  for (int x : pair.d) {
    if (x == m - 1)
      throw std::invalid_argument("cocycle_from_asds: D must not contain m-1");
    indices.push_back(x + m + 1);
  }
  return Cocycle::from_delta_indices(m, true, indices);
}

bool amicable_check(const SubsetPair& pair) {
  if (pair.b.empty() || pair.d.empty())
    throw std::invalid_argument("amicable_check: B and D must be nonempty");
  const int m = pair.m;
  const CirculantPM bc = circulant(m, pair.b);
  const CirculantPM dc = circulant(m, pair.d);
  // P = B^c (D^c)^T; symmetric iff P[i][j] = P[j][i] for all i < j.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::int64_t pij = 0, pji = 0;
      for (int k = 0; k < m; ++k) {
        pij += std::int64_t{bc.at(i, k)} * dc.at(j, k);
        pji += std::int64_t{bc.at(j, k)} * dc.at(i, k);
      }
      if (pij != pji) return false;
    }
  return true;
}

bool size_bounds_check(const AsdsParams& params) {
  const std::int64_t m = params.m, k = params.k1, r = params.k2;
  const std::int64_t mid = 2 * ((k + r) * m - (k * k + r * r));
  return (m - 1) * (m - 1) <= mid && mid <= m * m - 1;
}

PerturbationReport sds_perturbation_check(const SubsetPair& pair,
                                          Perturbation mode, int element) {
  const auto before = classify(pair);
  if (!before || !before->is_sds())
    throw std::invalid_argument("sds_perturbation_check: pair is not an SDS");
  const int m = pair.m;

  std::vector<int> b(pair.b);
  if (mode == Perturbation::remove) {
    auto it = std::find(b.begin(), b.end(), ((element % m) + m) % m);
    if (it == b.end())
      throw std::invalid_argument("sds_perturbation_check: element not in B");
    b.erase(it);
  } else {
    const int x = ((element % m) + m) % m;
    if (std::find(pair.b.begin(), pair.b.end(), x) != pair.b.end() ||
        std::find(pair.d.begin(), pair.d.end(), x) != pair.d.end())
      throw std::invalid_argument(
          "sds_perturbation_check: element already in B or D");
    b.push_back(x);
  }

  PerturbationReport report;
  report.before = *before;
  const SubsetPair perturbed(m, std::move(b), pair.d);
  report.after = classify(perturbed);
  report.asds_with_half_t =
      report.after.has_value() && report.after->t == (m - 1) / 2;

  // The lemma ties the original SDS parameters to exact rationals:
  //   remove: k1 = (m+3)/4 and mu = (m+3)/16 + (k2^2-k2)/(m-1)
  //   add:    k1 = (m-1)/4 and mu = (m-5)/16 + (k2^2-k2)/(m-1)
  // checked multiplied out over 16(m-1).
  const std::int64_t k1 = before->k1, k2 = before->k2, mu = before->mu;
  if (mode == Perturbation::remove) {
    report.lemma_formulas_hold =
        4 * k1 == m + 3 &&
        16 * (m - 1) * mu == (m + 3) * (m - 1) + 16 * (k2 * k2 - k2);
  } else {
    report.lemma_formulas_hold =
        4 * k1 == m - 1 &&
        16 * (m - 1) * mu == (m - 5) * (m - 1) + 16 * (k2 * k2 - k2);
  }
  return report;
}

}  // namespace optseq
