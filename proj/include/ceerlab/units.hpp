#pragma once

// Words in the units 1+x, 1+y of F/I and the padding trick for relator
// streams.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceerlab/errors.hpp"
#include "ceerlab/ideal.hpp"
#include "ceerlab/poly.hpp"

namespace ceerlab {

/// X^power (Letter::x) or Y^power (Letter::y); power may be negative.
struct UnitSyllable {
  Letter letter = Letter::x;
  std::int64_t power = 1;
  bool operator==(const UnitSyllable&) const = default;
};

using UnitWord = std::vector<UnitSyllable>;

/// Accepts "X^3 Y X^-1", "XYXY", "X*Y^-2" and "1" for the empty word.
UnitWord parse_unit_word(std::string_view text);
/// Space-separated syllables, "1" for the empty word.
std::string format_unit_word(const UnitWord& w);
/// Merges adjacent powers of the same letter and drops zero powers.
UnitWord free_reduce(UnitWord w);
UnitWord unit_inverse(const UnitWord& w);
UnitWord concat(UnitWord a, const UnitWord& b);
/// x^2 y x -> X^2 Y X.
UnitWord unit_word_of(const Monomial& m);

/// sum_{i<N} (-1)^i l^i, the inverse of 1 + l modulo l^N.
Poly unit_inverse_poly(Letter l, std::size_t N, std::uint32_t p);

/// The product of the syllable images, with every term above degree D
/// discarded along the way. No ideal is involved.
Poly unit_word_expand(const UnitWord& w, std::size_t N, std::uint32_t p, std::size_t D);

/// Image of w in F/I, reduced to its canonical representative modulo
/// F_{>D}. Requires x^N and y^N among I's generators.
Poly unit_word_to_poly(const UnitWord& w, std::size_t N, const HomogeneousIdeal& I, std::size_t D);

struct StagedRelator {
  Poly relator;
  Stage stage = 0;
};

/// Position s of a padded stream carries every relator enumerated at stage
/// s as "r + s*1 - s*1"; positions without one carry "0 + s*1 - s*1".
struct PaddedEntry {
  Stage position = 0;
  std::optional<Poly> relator;

  std::string text() const;
};

std::vector<PaddedEntry> pad_presentation(const std::vector<StagedRelator>& relators);
/// Inverse of pad_presentation.
std::vector<StagedRelator> decode_padded(const std::vector<PaddedEntry>& stream);

}  // namespace ceerlab
