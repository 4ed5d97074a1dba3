#include "ceerlab/golod_shafarevich.hpp"

#include <cctype>

#include "ceerlab/errors.hpp"

namespace ceerlab {
namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  boost::multiprecision::cpp_int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  auto num = parse_integer(trim(t.substr(0, slash)), text);
  auto den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational gs_bound(const Rational& epsilon, std::size_t k) {
  Rational base = 2 - 2 * epsilon;
  Rational out = epsilon * epsilon;
  for (std::size_t i = 2; i < k; ++i) out *= base;
  return out;
}

std::string GSAuditResult::describe() const {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::precondition:
      return "precondition violated: n_" + std::to_string(failing_degree) + " = " +
             std::to_string(count) + " but n_0 = n_1 = 0 is required";
    case Verdict::fail:
      break;
  }
  return "fail at k=" + std::to_string(failing_degree) + ": n_k = " + std::to_string(count) +
         " > " + format_rational(bound);
}

GSAuditResult gs_audit(const GSBudget& budget, std::size_t K) {
  if (budget.epsilon <= 0 || budget.epsilon > 1)
    throw InvalidInput("epsilon must lie in (0, 1], got " + format_rational(budget.epsilon));
  GSAuditResult result;
  for (std::size_t k : {std::size_t{0}, std::size_t{1}}) {
    auto it = budget.counts.find(k);
    if (it != budget.counts.end() && it->second != 0) {
      result.verdict = GSAuditResult::Verdict::precondition;
      result.failing_degree = k;
      result.count = it->second;
      return result;
    }
  }
  const Rational base = 2 - 2 * budget.epsilon;
  Rational bound = budget.epsilon * budget.epsilon;
  for (std::size_t k = 2; k <= K; ++k) {
    if (k > 2) bound *= base;
    auto it = budget.counts.find(k);
    std::size_t n = it == budget.counts.end() ? 0 : it->second;
    if (Rational(n) > bound) {
      result.verdict = GSAuditResult::Verdict::fail;
      result.failing_degree = k;
      result.count = n;
      result.bound = bound;
      return result;
    }
  }
  return result;
}

}  // namespace ceerlab
