#pragma once

// Reference implementations used only by the tests. Each one is written
// from the definitions and shares no algorithmic code with the library.

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ceerlab/ceer.hpp"
#include "ceerlab/poly.hpp"

namespace oracle {

using ceerlab::Natural;
using ceerlab::Stage;

// ---------------------------------------------------------------------
// Two-sided homogeneous ideals, by dense linear algebra over Z/p.

/// Coefficient vector of a homogeneous polynomial, indexed by the packed
/// monomial word (first letter in the high bit).
inline std::vector<std::uint32_t> dense(const ceerlab::Poly& f, std::size_t degree) {
  std::vector<std::uint32_t> v(std::size_t{1} << degree, 0);
  for (const auto& [m, c] : f.terms())
    if (m.degree() == degree) v[m.bits()] = c;
  return v;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

/// Row-reduced span of all u*g*v in one degree.
class DenseSpan {
 public:
  DenseSpan(const std::vector<ceerlab::Poly>& gens, std::uint32_t p, std::size_t degree)
      : p_(p), width_(std::size_t{1} << degree) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const std::size_t e = g.degree();
      if (e > degree) continue;
      const auto gv = dense(g, e);
      for (std::size_t left = 0; left + e <= degree; ++left) {
        const std::size_t right = degree - e - left;
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << left); ++u)
          for (std::uint64_t v = 0; v < (std::uint64_t{1} << right); ++v) {
            std::vector<std::uint32_t> row(width_, 0);
            for (std::uint64_t m = 0; m < gv.size(); ++m)
              if (gv[m]) row[(u << (e + right)) | (m << right) | v] = gv[m];
            insert(std::move(row));
          }
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }

  bool contains(std::vector<std::uint32_t> v) const {
    reduce(v);
    for (auto c : v)
      if (c) return false;
    return true;
  }

 private:
  void reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t col = pivots_[r];
      if (!v[col]) continue;
      const std::uint32_t c = v[col];
      for (std::size_t k = 0; k < width_; ++k)
        v[k] = (v[k] + p_ * p_ - c * rows_[r][k] % p_) % p_;
    }
  }

  void insert(std::vector<std::uint32_t> v) {
    reduce(v);
    std::size_t col = 0;
    while (col < width_ && !v[col]) ++col;
    if (col == width_) return;
    const std::uint32_t inv = inv_mod(v[col], p_);
    for (auto& c : v) c = c * inv % p_;
    for (auto& row : rows_) {
      if (!row[col]) continue;
      const std::uint32_t c = row[col];
      for (std::size_t k = 0; k < width_; ++k) row[k] = (row[k] + p_ * p_ - c * v[k] % p_) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(col);
  }

  std::uint32_t p_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// member(I, f): every homogeneous component of f lies in I's span of
/// that degree.
class IdealOracle {
 public:
  IdealOracle(std::vector<ceerlab::Poly> gens, std::uint32_t p) : gens_(std::move(gens)), p_(p) {}

  const DenseSpan& span(std::size_t degree) {
    auto it = spans_.find(degree);
    if (it == spans_.end()) it = spans_.emplace(degree, DenseSpan(gens_, p_, degree)).first;
    return it->second;
  }

  bool member(const ceerlab::Poly& f) {
    std::map<std::size_t, bool> degrees;
    for (const auto& [m, c] : f.terms()) degrees[m.degree()] = true;
    for (const auto& [d, _] : degrees)
      if (!span(d).contains(dense(f, d))) return false;
    return true;
  }

  std::uint64_t quotient_dim(std::size_t degree) {
    return (std::uint64_t{1} << degree) - span(degree).rank();
  }

 private:
  std::vector<ceerlab::Poly> gens_;
  std::uint32_t p_;
  std::map<std::size_t, DenseSpan> spans_;
};

// ---------------------------------------------------------------------
// Equivalence relations from their generating pairs.

/// Component labels of [0, bound) under the pairs enumerated by `stage`,
/// by breadth-first search; label = least member.
inline std::vector<Natural> closure(const std::vector<ceerlab::StagedPair>& pairs, Natural bound,
                                    Stage stage) {
  std::vector<std::vector<Natural>> adj(bound);
  for (const auto& p : pairs)
    if (p.stage <= stage && p.a < bound && p.b < bound) {
      adj[p.a].push_back(p.b);
      adj[p.b].push_back(p.a);
    }
  std::vector<Natural> label(bound, bound);
  for (Natural s = 0; s < bound; ++s) {
    if (label[s] != bound) continue;
    std::queue<Natural> q;
    q.push(s);
    label[s] = s;
    while (!q.empty()) {
      Natural x = q.front();
      q.pop();
      for (Natural y : adj[x])
        if (label[y] == bound) {
          label[y] = s;
          q.push(y);
        }
    }
  }
  return label;
}

/// Inverse of the Cantor pairing by search.
inline std::pair<Natural, Natural> unpair(Natural z) {
  for (Natural t = 0;; ++t) {
    const Natural base = t * (t + 1) / 2;
    if (z < base + t + 1) return {t - (z - base), z - base};
  }
}

/// A random ceer on [0, bound) with `count` pairs at increasing stages.
inline ceerlab::CeerTable random_ceer(std::mt19937_64& rng, Natural bound, std::size_t count,
                                      Stage max_gap = 3) {
  ceerlab::CeerTable t(bound);
  std::uniform_int_distribution<Natural> idx(0, bound - 1);
  std::uniform_int_distribution<Stage> gap(0, max_gap);
  Stage s = 1;
  for (std::size_t i = 0; i < count; ++i) {
    s += gap(rng);
    t.add(idx(rng), idx(rng), s);
  }
  return t;
}

// ---------------------------------------------------------------------
// Free products of cyclic groups.

/// A word as (factor, exponent) syllables; factor f is Z/orders[f].
using CyclicWord = std::vector<std::pair<std::size_t, std::int64_t>>;

inline bool cyclic_product_is_identity(const CyclicWord& w, const std::vector<std::int64_t>& orders) {
  std::vector<std::pair<std::size_t, std::int64_t>> stack;
  for (auto [f, e] : w) {
    e = ((e % orders[f]) + orders[f]) % orders[f];
    if (e == 0) continue;
    if (!stack.empty() && stack.back().first == f) {
      const std::int64_t merged = (stack.back().second + e) % orders[f];
      stack.pop_back();
      if (merged) stack.push_back({f, merged});
    } else {
      stack.push_back({f, e});
    }
  }
  return stack.empty();
}

// ---------------------------------------------------------------------
// Golod-Shafarevich bound with epsilon = a/b, in integers:
// n <= (a/b)^2 (2 - 2a/b)^(k-2)  <=>  n b^k <= a^2 (2b - 2a)^(k-2).
inline bool gs_holds(std::uint64_t n, std::uint64_t a, std::uint64_t b, std::size_t k) {
  using boost::multiprecision::cpp_int;
  cpp_int lhs = n, rhs = cpp_int(a) * a;
  for (std::size_t i = 0; i < k; ++i) lhs *= b;
  for (std::size_t i = 2; i < k; ++i) rhs *= (2 * b - 2 * a);
  return lhs <= rhs;
}

}  // namespace oracle
