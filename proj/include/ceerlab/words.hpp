#pragma once

// Group words over named generators: "x3", "x3^-1", "g7^2", "a".

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ceerlab/errors.hpp"

namespace ceerlab {

/// One power of a generator. `name` is a lowercase letter; unindexed
/// generators such as "a" have `indexed == false`.
struct GroupLetter {
  char name = 'x';
  bool indexed = true;
  Natural index = 0;
  std::int64_t exp = 1;

  bool same_generator(const GroupLetter& o) const {
    return name == o.name && indexed == o.indexed && index == o.index;
  }
  bool operator==(const GroupLetter&) const = default;
};

using GroupWord = std::vector<GroupLetter>;

inline GroupLetter gen(char name, Natural index, std::int64_t exp = 1) {
  return {name, true, index, exp};
}
inline GroupLetter plain(char name, std::int64_t exp = 1) { return {name, false, 0, exp}; }

/// Whitespace-separated tokens; "1" or the empty string is the empty word.
GroupWord parse_word(std::string_view text);
/// Round-trips with parse_word; the empty word prints as "1".
std::string format_word(const GroupWord& w);

GroupWord inverse(const GroupWord& w);
GroupWord concat(GroupWord a, const GroupWord& b);
/// Merges adjacent powers of one generator and drops zero powers.
GroupWord freely_reduce(const GroupWord& w);

/// Sparse exponent vector, generator index -> exponent (no zeros).
using Exponents = std::map<Natural, std::int64_t>;

/// Abelianized exponents of the letters named `name`. Throws InvalidInput
/// for letters with any other name.
Exponents exponents_of(const GroupWord& w, char name = 'x');
/// Letters in increasing index order.
GroupWord word_of(const Exponents& e, char name = 'x');
std::string format_exponents(const Exponents& e, char name = 'x');
void add_scaled(Exponents& into, const Exponents& v, std::int64_t factor);

}  // namespace ceerlab
