#include "optseq/text.hpp"

#include <charconv>

namespace optseq {

std::optional<BinarySeq> parse_binary(std::string_view text) {
  if (text.empty() || text.size() > kMaxLength) return std::nullopt;
  std::vector<std::int8_t> v;
  v.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      v.push_back(1);
    else if (c == '-')
      v.push_back(-1);
    else
      return std::nullopt;
  }
  return BinarySeq(std::move(v));
}

std::optional<QuaternarySeq> parse_quaternary(std::string_view text) {
  if (text.empty() || text.size() > kMaxLength) return std::nullopt;
  std::vector<std::uint8_t> e;
  e.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': e.push_back(0); break;
      case 'i': e.push_back(1); break;
      case '-': e.push_back(2); break;
      case 'j': e.push_back(3); break;
      default: return std::nullopt;
    }
  }
  return QuaternarySeq(std::move(e));
}

std::string render(const BinarySeq& phi) {
  std::string s;
  s.reserve(phi.size());
  for (std::int8_t x : phi.v) s.push_back(x == 1 ? '+' : '-');
  return s;
}

std::string render(const QuaternarySeq& f) {
  static constexpr char kSymbols[4] = {'+', 'i', '-', 'j'};
  std::string s;
  s.reserve(f.size());
  for (std::uint8_t x : f.e) s.push_back(kSymbols[x]);
  return s;
}

std::string render(const GaussianInt& z) {
  std::string s = std::to_string(z.re);
  if (z.im != 0) {
    s += z.im > 0 ? '+' : '-';
    s += std::to_string(z.im > 0 ? z.im : -z.im);
    s += 'i';
  }
  return s;
}

std::string render_spectrum(std::span<const GaussianInt> spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) s += ',';
    s += render(spec[i]);
  }
  return s;
}

std::string render_spectrum(std::span<const std::int64_t> spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec[i]);
  }
  return s;
}

std::string render_subset(const std::vector<int>& xs) {
  if (xs.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::optional<std::vector<int>> parse_subset(std::string_view text) {
  if (text == "{}" || text.empty()) return std::vector<int>{};
  std::vector<int> out;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) return std::nullopt;
    out.push_back(value);
    p = next;
    if (p == end) break;
    if (*p != ',') return std::nullopt;
    ++p;
    if (p == end) return std::nullopt;  // trailing comma
  }
  return out;
}

std::string render_matrix(const CocyclicMatrix& mat) {
  std::string s;
  s.reserve(static_cast<std::size_t>(mat.n) * (mat.n + 1));
  for (int r = 0; r < mat.n; ++r) {
    if (r) s += '/';
    for (int c = 0; c < mat.n; ++c) s.push_back(mat.entry(r, c) == 1 ? '+' : '-');
  }
  return s;
}

}  // namespace optseq
