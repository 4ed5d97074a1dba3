#pragma once

// The free associative algebra F = (Z/pZ)<x,y> in two non-commuting
// variables.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceerlab/errors.hpp"

namespace ceerlab {

enum class Letter : std::uint8_t { x = 0, y = 1 };

inline char letter_char(Letter l) { return l == Letter::x ? 'x' : 'y'; }

/// A word over {x, y} packed one bit per letter, first letter most
/// significant, so that within a degree the packed value is the word's
/// rank in lexicographic order (x < y).
class Monomial {
 public:
  static constexpr std::size_t kMaxDegree = 63;

  constexpr Monomial() = default;
  Monomial(std::uint64_t bits, std::size_t degree);

  static Monomial letter(Letter l) { return Monomial(static_cast<std::uint64_t>(l), 1); }
  static Monomial power(Letter l, std::size_t n);
  /// Parses "x*y*x", "xyx", "x^2*y" or "1".
  static Monomial parse(std::string_view text);

  std::size_t degree() const noexcept { return degree_; }
  /// Lexicographic rank among the 2^degree monomials of this degree.
  std::uint64_t bits() const noexcept { return bits_; }
  Letter at(std::size_t i) const;
  /// Maximal blocks of equal letters: x^2 y x -> {(x,2),(y,1),(x,1)}.
  std::vector<std::pair<Letter, std::size_t>> runs() const;

  Monomial operator*(const Monomial& rhs) const;
  /// Letters as "x^2*y*x"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t degree_ = 0;
};

/// Rejects anything but the primes 2, 3, 5, 7.
void check_modulus(std::uint32_t p);

/// A polynomial over Z/pZ in canonical form (no zero coefficients).
class Poly {
 public:
  using Terms = std::map<Monomial, std::uint32_t>;

  explicit Poly(std::uint32_t p = 2);
  Poly(std::uint32_t p, Monomial m, std::int64_t coefficient = 1);

  static Poly constant(std::uint32_t p, std::int64_t c) { return Poly(p, Monomial(), c); }
  /// Text form: a sum of terms "c*w", e.g. "1 + x*y + 2*y*x". Accepts "-"
  /// and powers like "x^3"; coefficients are reduced mod p.
  static Poly parse(std::string_view text, std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::uint32_t coefficient(const Monomial& m) const;
  /// Largest degree present; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_homogeneous() const;

  Poly& add_term(const Monomial& m, std::int64_t coefficient);
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly operator-() const;
  Poly scaled(std::int64_t c) const;

  /// Degree-k homogeneous component.
  Poly component(std::size_t k) const;
  /// Drops every term of degree above `max_degree`.
  Poly truncated(std::size_t max_degree) const;

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void require_same_modulus(const Poly& rhs) const;

  std::uint32_t p_;
  Terms terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
/// Concatenation product. Throws ModulusMismatch for different moduli.
Poly poly_mul(const Poly& u, const Poly& v);
/// Product with every term of degree above `max_degree` discarded.
Poly poly_mul_truncated(const Poly& u, const Poly& v, std::size_t max_degree);
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

/// Degree -> component; the zero polynomial gives an empty map.
std::map<std::size_t, Poly> homogeneous_components(const Poly& f);

}  // namespace ceerlab
