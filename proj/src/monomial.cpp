#include <cctype>

#include "ceerlab/poly.hpp"

namespace ceerlab {

Monomial::Monomial(std::uint64_t bits, std::size_t degree)
    : bits_(bits), degree_(static_cast<std::uint8_t>(degree)) {
  if (degree > kMaxDegree)
    throw InvalidInput("monomial degree " + std::to_string(degree) + " exceeds " +
                       std::to_string(kMaxDegree));
  if (degree < 64 && (bits >> degree) != 0)
    throw InvalidInput("monomial bits exceed its degree");
}

Monomial Monomial::power(Letter l, std::size_t n) {
  if (n > kMaxDegree) throw InvalidInput("monomial power too large");
  std::uint64_t bits = l == Letter::y ? ((std::uint64_t{1} << n) - 1) : 0;
  return Monomial(bits, n);
}

Monomial Monomial::parse(std::string_view text) {
  Monomial out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1' && text.find_first_not_of(" *", i + 1) == std::string_view::npos)
    return out;
  while (skip(), i < text.size()) {
    char c = text[i++];
    if (c != 'x' && c != 'y') throw ParseError(0, "unexpected '" + std::string(1, c) + "' in monomial");
    std::size_t n = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      n = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        n = n * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (i == start) throw ParseError(0, "missing exponent after '^'");
    }
    out = out * power(c == 'x' ? Letter::x : Letter::y, n);
  }
  return out;
}

Letter Monomial::at(std::size_t i) const {
  if (i >= degree_) throw RangeError("letter index out of range");
  return static_cast<Letter>((bits_ >> (degree_ - 1 - i)) & 1u);
}

std::vector<std::pair<Letter, std::size_t>> Monomial::runs() const {
  std::vector<std::pair<Letter, std::size_t>> out;
  for (std::size_t i = 0; i < degree_; ++i) {
    Letter l = at(i);
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  std::size_t d = degree_ + rhs.degree_;
  if (d > kMaxDegree) throw InvalidInput("monomial product exceeds the maximal degree");
  return Monomial((bits_ << rhs.degree_) | rhs.bits_, d);
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (auto [l, n] : runs()) {
    if (!out.empty()) out += '*';
    out += letter_char(l);
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

}  // namespace ceerlab
