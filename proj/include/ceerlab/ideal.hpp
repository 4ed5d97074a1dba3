#pragma once

// Two-sided homogeneous ideals of F = (Z/pZ)<x,y>, materialized degree by
// degree as echelon bases inside F_k.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ceerlab/poly.hpp"

namespace ceerlab {

/// Row-reduced basis of a subspace of F_k. Coordinates are the packed
/// monomial bits of degree k; every row is sorted by coordinate and has
/// leading coefficient 1, and no two rows share a leading coordinate.
class EchelonBasis {
 public:
  using Row = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

  EchelonBasis(std::uint32_t p, std::size_t degree);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  bool is_pivot(std::uint64_t column) const { return pivot_.count(column) != 0; }

  /// Canonical representative of row + span: the unique vector in the
  /// coset whose support avoids every pivot column.
  Row reduce(Row row) const;
  /// Adds a row; returns false if it was already in the span.
  bool insert(Row row);

  Row row_of(const Poly& f) const;
  Poly poly_of(const Row& row) const;

 private:
  std::uint32_t p_;
  std::size_t degree_;
  std::vector<Row> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

class HomogeneousIdeal {
 public:
  static constexpr std::size_t kDefaultMaxDegree = 16;

  explicit HomogeneousIdeal(std::uint32_t p = 2, std::size_t maxdeg = kDefaultMaxDegree);
  HomogeneousIdeal(const HomogeneousIdeal& other);
  HomogeneousIdeal& operator=(const HomogeneousIdeal& other);
  HomogeneousIdeal(HomogeneousIdeal&&) noexcept = default;
  HomogeneousIdeal& operator=(HomogeneousIdeal&&) noexcept = default;

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t maxdeg() const noexcept { return maxdeg_; }

  /// Adds a homogeneous generator. Zero is ignored. Cached bases of degree
  /// at least deg(h) are extended in place; lower degrees are untouched.
  /// Generators above the horizon are recorded (they count towards n_k)
  /// but never materialized.
  void add_generator(const Poly& h);
  const std::map<std::size_t, std::vector<Poly>>& generators() const noexcept { return gens_; }
  /// n_k: number of generators of each degree.
  std::map<std::size_t, std::size_t> generator_counts() const;
  std::size_t max_generator_degree() const;
  /// Bumped by every accepted generator.
  std::uint64_t version() const noexcept { return version_; }
  bool has_generator(const Poly& h) const;

  /// Echelon basis of I_k. Throws HorizonError above maxdeg.
  const EchelonBasis& degree_basis(std::size_t k) const;
  bool member(const Poly& f) const;
  /// 2^k - dim I_k.
  std::uint64_t quotient_dim(std::size_t k) const;
  /// Canonical representative of f in A / F_{>D}.
  Poly quotient_reduce(const Poly& f, std::size_t D) const;

 private:
  void check_horizon(std::size_t k) const;
  void add_products(EchelonBasis& basis, const Poly& h) const;

  std::uint32_t p_;
  std::size_t maxdeg_;
  std::map<std::size_t, std::vector<Poly>> gens_;
  std::uint64_t version_ = 0;
  mutable std::unique_ptr<std::mutex> mutex_;
  mutable std::map<std::size_t, std::unique_ptr<EchelonBasis>> cache_;
};

}  // namespace ceerlab
