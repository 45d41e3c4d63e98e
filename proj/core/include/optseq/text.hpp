#ifndef OPTSEQ_TEXT_HPP
#define OPTSEQ_TEXT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optseq/asds.hpp"
#include "optseq/cocycles.hpp"
#include "optseq/seq.hpp"

namespace optseq {

// Sequence alphabet: '+' = +1, '-' = -1, 'i' = i, 'j' = -i.
// Binary text uses only '+' and '-'.

std::optional<BinarySeq> parse_binary(std::string_view text);
std::optional<QuaternarySeq> parse_quaternary(std::string_view text);

std::string render(const BinarySeq& phi);
std::string render(const QuaternarySeq& f);

/// "re" when im = 0, otherwise "re+Ni"/"re-Ni" (e.g. "3", "-1", "0+2i").
std::string render(const GaussianInt& z);
std::string render_spectrum(std::span<const GaussianInt> spec);
std::string render_spectrum(std::span<const std::int64_t> spec);

/// Comma-separated residues, "{}" for the empty subset.
std::string render_subset(const std::vector<int>& xs);
std::optional<std::vector<int>> parse_subset(std::string_view text);

/// Rows of '+'/'-' joined by '/'.
std::string render_matrix(const CocyclicMatrix& mat);

}  // namespace optseq

#endif
