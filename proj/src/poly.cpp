#include <cctype>
#include <unordered_map>

#include "ceerlab/poly.hpp"

namespace ceerlab {
namespace {

std::uint32_t reduce_mod(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits() * 131 + m.degree());
  }
};

Poly multiply(const Poly& u, const Poly& v, std::size_t max_degree) {
  if (u.modulus() != v.modulus())
    throw ModulusMismatch("cannot multiply polynomials over Z/" + std::to_string(u.modulus()) +
                          " and Z/" + std::to_string(v.modulus()));
  const std::uint32_t p = u.modulus();
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  acc.reserve(u.term_count() * v.term_count());
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) {
      if (mu.degree() + mv.degree() > max_degree) continue;
      auto& slot = acc[mu * mv];
      slot = (slot + std::uint64_t{cu} * cv) % p;
    }
  Poly out(p);
  for (const auto& [m, c] : acc)
    if (c != 0) out.add_term(m, static_cast<std::int64_t>(c));
  return out;
}

}  // namespace

void check_modulus(std::uint32_t p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw InvalidInput("modulus must be a prime <= 7, got " + std::to_string(p));
}

Poly::Poly(std::uint32_t p) : p_(p) { check_modulus(p); }

Poly::Poly(std::uint32_t p, Monomial m, std::int64_t coefficient) : Poly(p) {
  add_term(m, coefficient);
}

std::uint32_t Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::size_t Poly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly& Poly::add_term(const Monomial& m, std::int64_t coefficient) {
  std::uint32_t c = reduce_mod(coefficient, p_);
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void Poly::require_same_modulus(const Poly& rhs) const {
  if (p_ != rhs.p_)
    throw ModulusMismatch("modulus mismatch: " + std::to_string(p_) + " vs " + std::to_string(rhs.p_));
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_modulus(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_modulus(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -static_cast<std::int64_t>(c));
  return *this;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(std::int64_t c) const {
  Poly out(p_);
  for (const auto& [m, a] : terms_) out.add_term(m, static_cast<std::int64_t>(a) * reduce_mod(c, p_));
  return out;
}

Poly Poly::component(std::size_t k) const {
  Poly out(p_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Poly Poly::truncated(std::size_t max_degree) const {
  Poly out(p_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.degree() == 0)
      out += std::to_string(c);
    else if (c == 1)
      out += m.to_string();
    else
      out += std::to_string(c) + "*" + m.to_string();
  }
  return out;
}

Poly Poly::parse(std::string_view text, std::uint32_t p) {
  Poly out(p);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  int sign = 1;
  bool expect_term = true;
  bool any = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (c == '+' || c == '-') {
      if (!expect_term && any) {
        sign = c == '-' ? -1 : 1;
      } else {
        sign *= c == '-' ? -1 : 1;
      }
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) throw ParseError(0, "missing '+' between terms near position " + std::to_string(i));
    std::size_t end = text.find_first_of("+-", i);
    std::string_view term = text.substr(i, end == std::string_view::npos ? text.size() - i : end - i);
    i += term.size();
    std::int64_t coef = 1;
    Monomial mono;
    std::size_t j = 0;
    bool factor_seen = false;
    while (j < term.size()) {
      while (j < term.size() && (std::isspace(static_cast<unsigned char>(term[j])) || term[j] == '*')) ++j;
      if (j >= term.size()) break;
      if (std::isdigit(static_cast<unsigned char>(term[j]))) {
        std::int64_t v = 0;
        while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) {
          v = (v * 10 + (term[j] - '0')) % p;
          ++j;
        }
        coef = coef * v % p;
      } else {
        std::size_t k = j;
        while (k < term.size() && term[k] != '*' && !std::isspace(static_cast<unsigned char>(term[k]))) ++k;
        try {
          mono = mono * Monomial::parse(term.substr(j, k - j));
        } catch (const ParseError& e) {
          throw ParseError(0, std::string(e.what()) + " in term '" + std::string(term) + "'");
        }
        j = k;
      }
      factor_seen = true;
    }
    if (!factor_seen) throw ParseError(0, "empty term");
    out.add_term(mono, sign * coef);
    sign = 1;
    expect_term = false;
    any = true;
  }
  if (expect_term && any) throw ParseError(0, "dangling sign at end of polynomial");
  if (!any) throw ParseError(0, "empty polynomial text");
  return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly poly_mul(const Poly& u, const Poly& v) {
  return multiply(u, v, Monomial::kMaxDegree);
}

Poly poly_mul_truncated(const Poly& u, const Poly& v, std::size_t max_degree) {
  return multiply(u, v, max_degree);
}

std::map<std::size_t, Poly> homogeneous_components(const Poly& f) {
  std::map<std::size_t, Poly> out;
  for (const auto& [m, c] : f.terms()) {
    auto it = out.try_emplace(m.degree(), f.modulus()).first;
    it->second.add_term(m, c);
  }
  return out;
}

}  // namespace ceerlab
