#include "toric/rational.hpp"

#include <cctype>

#include "toric/error.hpp"

namespace toric {

const char* to_string(GenericityIssue issue) {
  switch (issue) {
    case GenericityIssue::kLambdaNotSeparating: return "lambda not separating";
    case GenericityIssue::kNonGenericInput: return "non-generic input";
    case GenericityIssue::kSingularJacobian: return "singular Jacobian";
    case GenericityIssue::kNoValidApproximant: return "no valid approximant";
    case GenericityIssue::kMuNotPrimitive: return "mu not primitive for projection";
    case GenericityIssue::kVerificationFailed: return "verification failed";
  }
  return "genericity failure";
}

Rat make_rat(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw MathError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  Rat r = make_rat(Integer(std::string(num)), Integer(std::string(den)));
  return negative ? Rat(-r) : r;
}

Integer common_denominator(const std::vector<Rat>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace toric
