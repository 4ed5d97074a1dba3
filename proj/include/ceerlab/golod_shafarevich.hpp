#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ceerlab {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b" or "a" into an exact rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

struct GSBudget {
  Rational epsilon{1, 4};
  /// n_k, number of generators of degree k; absent degrees count 0.
  std::map<std::size_t, std::size_t> counts;
};

struct GSAuditResult {
  enum class Verdict { pass, fail, precondition };
  Verdict verdict = Verdict::pass;
  std::size_t failing_degree = 0;
  std::size_t count = 0;
  /// epsilon^2 (2 - 2 epsilon)^(k-2) at the failing degree.
  Rational bound;

  bool passed() const { return verdict == Verdict::pass; }
  std::string describe() const;
};

/// epsilon^2 (2 - 2 epsilon)^(k-2) for k >= 2.
Rational gs_bound(const Rational& epsilon, std::size_t k);

/// Checks n_0 = n_1 = 0 and n_k <= epsilon^2 (2 - 2 epsilon)^(k-2) for
/// every 2 <= k <= K in exact arithmetic. Throws InvalidInput for epsilon
/// outside (0, 1].
GSAuditResult gs_audit(const GSBudget& budget, std::size_t K);

}  // namespace ceerlab
