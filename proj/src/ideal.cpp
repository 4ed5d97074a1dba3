#include "ceerlab/ideal.hpp"

#include <algorithm>

namespace ceerlab {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw InvalidInput("zero has no inverse mod " + std::to_string(p));
  std::uint32_t result = 1;
  for (std::uint32_t e = p - 2, base = a; e; e >>= 1, base = base * base % p)
    if (e & 1) result = result * base % p;
  return result;
}

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t degree) : p_(p), degree_(degree) {}

EchelonBasis::Row EchelonBasis::reduce(Row row) const {
  if (rows_.empty() || row.empty()) return row;
  std::map<std::uint64_t, std::uint32_t> work(row.begin(), row.end());
  auto it = work.begin();
  while (it != work.end()) {
    auto piv = pivot_.find(it->first);
    if (piv == pivot_.end()) {
      ++it;
      continue;
    }
    const std::uint64_t col = it->first;
    const std::uint32_t factor = p_ - it->second;
    for (const auto& [c, v] : rows_[piv->second]) {
      auto [slot, inserted] = work.try_emplace(c, 0);
      slot->second = (slot->second + factor * v) % p_;
      if (slot->second == 0 && c != col) work.erase(slot);
    }
    it = work.erase(work.find(col));
  }
  return Row(work.begin(), work.end());
}

bool EchelonBasis::insert(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::uint32_t inv = inverse_mod(row.front().second, p_);
  for (auto& [c, v] : row) v = v * inv % p_;
  pivot_.emplace(row.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

EchelonBasis::Row EchelonBasis::row_of(const Poly& f) const {
  Row row;
  row.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree_)
      throw InvalidInput("polynomial is not homogeneous of degree " + std::to_string(degree_));
    row.emplace_back(m.bits(), c);
  }
  return row;
}

Poly EchelonBasis::poly_of(const Row& row) const {
  Poly out(p_);
  for (const auto& [c, v] : row) out.add_term(Monomial(c, degree_), v);
  return out;
}

HomogeneousIdeal::HomogeneousIdeal(std::uint32_t p, std::size_t maxdeg)
    : p_(p), maxdeg_(maxdeg), mutex_(std::make_unique<std::mutex>()) {
  check_modulus(p);
  if (maxdeg > Monomial::kMaxDegree)
    throw InvalidInput("maxdeg must not exceed " + std::to_string(Monomial::kMaxDegree));
}

HomogeneousIdeal::HomogeneousIdeal(const HomogeneousIdeal& other)
    : p_(other.p_),
      maxdeg_(other.maxdeg_),
      gens_(other.gens_),
      version_(other.version_),
      mutex_(std::make_unique<std::mutex>()) {
  std::lock_guard lock(*other.mutex_);
  for (const auto& [k, basis] : other.cache_) cache_.emplace(k, std::make_unique<EchelonBasis>(*basis));
}

HomogeneousIdeal& HomogeneousIdeal::operator=(const HomogeneousIdeal& other) {
  if (this != &other) {
    HomogeneousIdeal copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void HomogeneousIdeal::add_products(EchelonBasis& basis, const Poly& h) const {
  const std::size_t d = h.degree();
  const std::size_t k = basis.degree();
  if (d > k) return;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
  for (const auto& [m, c] : h.terms()) terms.emplace_back(m.bits(), c);
  for (std::size_t a = 0; a + d <= k; ++a) {
    const std::size_t b = k - d - a;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << a); ++u)
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << b); ++v) {
        EchelonBasis::Row row;
        row.reserve(terms.size());
        for (const auto& [bits, c] : terms) row.emplace_back((u << (d + b)) | (bits << b) | v, c);
        std::sort(row.begin(), row.end());
        basis.insert(std::move(row));
      }
  }
}

void HomogeneousIdeal::add_generator(const Poly& h) {
  if (h.modulus() != p_) throw ModulusMismatch("generator modulus differs from the ideal's");
  if (h.is_zero()) return;
  if (!h.is_homogeneous()) throw InvalidInput("generator " + h.to_string() + " is not homogeneous");
  const std::size_t d = h.degree();
  std::lock_guard lock(*mutex_);
  gens_[d].push_back(h);
  ++version_;
  for (auto it = cache_.lower_bound(d); it != cache_.end(); ++it) add_products(*it->second, h);
}

std::map<std::size_t, std::size_t> HomogeneousIdeal::generator_counts() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [d, list] : gens_) out[d] = list.size();
  return out;
}

std::size_t HomogeneousIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.rbegin()->first;
}

bool HomogeneousIdeal::has_generator(const Poly& h) const {
  auto it = gens_.find(h.degree());
  return it != gens_.end() && std::find(it->second.begin(), it->second.end(), h) != it->second.end();
}

void HomogeneousIdeal::check_horizon(std::size_t k) const {
  if (k > maxdeg_) throw HorizonError(k, maxdeg_);
}

const EchelonBasis& HomogeneousIdeal::degree_basis(std::size_t k) const {
  check_horizon(k);
  std::lock_guard lock(*mutex_);
  auto it = cache_.find(k);
  if (it != cache_.end()) return *it->second;
  auto basis = std::make_unique<EchelonBasis>(p_, k);
  for (const auto& [d, list] : gens_) {
    if (d > k) break;
    for (const auto& h : list) add_products(*basis, h);
  }
  return *cache_.emplace(k, std::move(basis)).first->second;
}

bool HomogeneousIdeal::member(const Poly& f) const {
  if (f.modulus() != p_) throw ModulusMismatch("polynomial modulus differs from the ideal's");
  if (f.is_zero()) return true;
  check_horizon(f.degree());
  for (const auto& [k, component] : homogeneous_components(f)) {
    const auto& basis = degree_basis(k);
    if (!basis.reduce(basis.row_of(component)).empty()) return false;
  }
  return true;
}

std::uint64_t HomogeneousIdeal::quotient_dim(std::size_t k) const {
  check_horizon(k);
  return (std::uint64_t{1} << k) - degree_basis(k).rank();
}

Poly HomogeneousIdeal::quotient_reduce(const Poly& f, std::size_t D) const {
  if (f.modulus() != p_) throw ModulusMismatch("polynomial modulus differs from the ideal's");
  check_horizon(D);
  Poly out(p_);
  for (const auto& [k, component] : homogeneous_components(f.truncated(D))) {
    const auto& basis = degree_basis(k);
    out += basis.poly_of(basis.reduce(basis.row_of(component)));
  }
  return out;
}

}  // namespace ceerlab
