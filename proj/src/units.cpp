#include "ceerlab/units.hpp"

#include <algorithm>
#include <cctype>

namespace ceerlab {

UnitWord parse_unit_word(std::string_view text) {
  UnitWord out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1' && text.find_first_not_of(" *", i + 1) == std::string_view::npos)
    return out;
  while (skip(), i < text.size()) {
    char c = text[i++];
    if (c != 'X' && c != 'Y') throw ParseError(0, "unexpected '" + std::string(1, c) + "' in unit word");
    std::int64_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = i < text.size() && text[i] == '-';
      if (negative) ++i;
      std::size_t start = i;
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        power = power * 10 + (text[i++] - '0');
      if (i == start) throw ParseError(0, "missing exponent in unit word");
      if (negative) power = -power;
    }
    out.push_back({c == 'X' ? Letter::x : Letter::y, power});
  }
  return out;
}

std::string format_unit_word(const UnitWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += s.letter == Letter::x ? 'X' : 'Y';
    if (s.power != 1) out += "^" + std::to_string(s.power);
  }
  return out;
}

UnitWord free_reduce(UnitWord w) {
  UnitWord out;
  for (const auto& s : w) {
    if (s.power == 0) continue;
    if (!out.empty() && out.back().letter == s.letter) {
      out.back().power += s.power;
      if (out.back().power == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

UnitWord unit_inverse(const UnitWord& w) {
  UnitWord out(w.rbegin(), w.rend());
  for (auto& s : out) s.power = -s.power;
  return out;
}

UnitWord concat(UnitWord a, const UnitWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

UnitWord unit_word_of(const Monomial& m) {
  UnitWord out;
  for (auto [l, n] : m.runs()) out.push_back({l, static_cast<std::int64_t>(n)});
  return out;
}

Poly unit_inverse_poly(Letter l, std::size_t N, std::uint32_t p) {
  Poly out(p);
  for (std::size_t i = 0; i < N; ++i) out.add_term(Monomial::power(l, i), i % 2 ? -1 : 1);
  return out;
}

Poly unit_word_expand(const UnitWord& w, std::size_t N, std::uint32_t p, std::size_t D) {
  if (N < 2) throw InvalidInput("unit exponent N must be at least 2");
  Poly out = Poly::constant(p, 1);
  for (const auto& s : free_reduce(w)) {
    Poly factor = s.power > 0 ? Poly::constant(p, 1) + Poly(p, Monomial::letter(s.letter))
                              : unit_inverse_poly(s.letter, N, p);
    for (std::int64_t i = 0, n = s.power > 0 ? s.power : -s.power; i < n; ++i)
      out = poly_mul_truncated(out, factor, D);
  }
  return out;
}

Poly unit_word_to_poly(const UnitWord& w, std::size_t N, const HomogeneousIdeal& I, std::size_t D) {
  const std::uint32_t p = I.modulus();
  for (Letter l : {Letter::x, Letter::y})
    if (!I.has_generator(Poly(p, Monomial::power(l, N))))
      throw InvalidInput(std::string("the ideal lacks ") + letter_char(l) + "^" + std::to_string(N) +
                         ", so the unit inverses are not valid");
  return I.quotient_reduce(unit_word_expand(w, N, p, D), D);
}

std::string PaddedEntry::text() const {
  const std::string s = std::to_string(position);
  return (relator ? relator->to_string() : std::string("0")) + " + " + s + "*1 - " + s + "*1";
}

std::vector<PaddedEntry> pad_presentation(const std::vector<StagedRelator>& relators) {
  std::vector<PaddedEntry> out;
  if (relators.empty()) return out;
  std::vector<StagedRelator> sorted = relators;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const StagedRelator& a, const StagedRelator& b) { return a.stage < b.stage; });
  std::size_t next = 0;
  for (Stage s = 0; s <= sorted.back().stage; ++s) {
    bool any = false;
    for (; next < sorted.size() && sorted[next].stage == s; ++next) {
      out.push_back({s, sorted[next].relator});
      any = true;
    }
    if (!any) out.push_back({s, std::nullopt});
  }
  return out;
}

std::vector<StagedRelator> decode_padded(const std::vector<PaddedEntry>& stream) {
  std::vector<StagedRelator> out;
  for (const auto& e : stream)
    if (e.relator) out.push_back({*e.relator, e.position});
  return out;
}

}  // namespace ceerlab
