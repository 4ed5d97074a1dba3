#include "ceerlab/words.hpp"

#include <cctype>
#include <sstream>

namespace ceerlab {

GroupWord parse_word(std::string_view text) {
  GroupWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t i = 0;
    if (!std::islower(static_cast<unsigned char>(tok[0])))
      throw ParseError(0, "bad word token '" + tok + "'");
    GroupLetter l;
    l.name = tok[i++];
    l.indexed = i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]));
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
      l.index = l.index * 10 + static_cast<Natural>(tok[i++] - '0');
    if (i < tok.size()) {
      if (tok[i] != '^' || i + 1 == tok.size()) throw ParseError(0, "bad word token '" + tok + "'");
      ++i;
      bool negative = tok[i] == '-';
      if (negative) ++i;
      std::size_t start = i;
      l.exp = 0;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
        l.exp = l.exp * 10 + (tok[i++] - '0');
      if (i == start || i != tok.size()) throw ParseError(0, "bad word token '" + tok + "'");
      if (negative) l.exp = -l.exp;
    }
    out.push_back(l);
  }
  return out;
}

std::string format_word(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.name;
    if (l.indexed) out += std::to_string(l.index);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

GroupWord concat(GroupWord a, const GroupWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GroupWord freely_reduce(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().same_generator(l)) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

void add_scaled(Exponents& into, const Exponents& v, std::int64_t factor) {
  for (const auto& [g, e] : v) {
    auto& slot = into[g];
    slot += factor * e;
    if (slot == 0) into.erase(g);
  }
}

Exponents exponents_of(const GroupWord& w, char name) {
  Exponents out;
  for (const auto& l : w) {
    if (l.name != name || !l.indexed)
      throw InvalidInput(std::string("letter '") + format_word({l}) + "' is not a generator " + name + "k");
    add_scaled(out, {{l.index, 1}}, l.exp);
  }
  return out;
}

GroupWord word_of(const Exponents& e, char name) {
  GroupWord out;
  for (const auto& [g, x] : e) out.push_back(gen(name, g, x));
  return out;
}

std::string format_exponents(const Exponents& e, char name) {
  return format_word(word_of(e, name));
}

}  // namespace ceerlab
