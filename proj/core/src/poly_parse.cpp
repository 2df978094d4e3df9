#include <cctype>

#include "toric/error.hpp"
#include "toric/text.hpp"

namespace toric {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t ambient) : s_(text), n_(ambient) {}

  SparsePoly parse_all() {
    SparsePoly p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

  RatFun parse_fraction() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      SparsePoly num = parse_sum();
      expect(')');
      skip_ws();
      if (pos_ == s_.size()) return RatFun(num);
      expect('/');
      expect('(');
      SparsePoly den = parse_sum();
      expect(')');
      skip_ws();
      if (pos_ != s_.size()) fail("unexpected character");
      return RatFun::normalize(num, den);
    }
    return RatFun(parse_all());
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  SparsePoly parse_sum() {
    SparsePoly acc(n_);
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      SparsePoly t = parse_term();
      if (sign < 0) t = -t;
      acc += t;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  SparsePoly parse_term() {
    Rat coeff = 1;
    ExpVec e(n_);
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::string num = digits();
        std::string den = "1";
        if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
          ++pos_;
          den = digits();
        }
        if (Integer(den) == 0) fail("zero denominator");
        coeff *= make_rat(Integer(num), Integer(den));
      } else if (c == 'X') {
        ++pos_;
        const std::size_t index = std::stoul(digits());
        if (index == 0 || index > n_) fail("variable X" + std::to_string(index) + " out of range");
        std::uint32_t power = 1;
        if (peek() == '^') {
          ++pos_;
          power = static_cast<std::uint32_t>(std::stoul(digits()));
        }
        e.set(index - 1, e[index - 1] + power);
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return SparsePoly::monomial(std::move(e), coeff);
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, std::size_t ambient) {
  return PolyParser(text, ambient).parse_all();
}

RatFun parse_ratfun(std::string_view text, std::size_t ambient) {
  return PolyParser(text, ambient).parse_fraction();
}

}  // namespace toric
