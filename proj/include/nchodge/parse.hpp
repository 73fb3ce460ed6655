#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "nchodge/poly.hpp"

namespace nchodge {

/// Recursive-descent parser for polynomial expressions.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ('^' nat)?
///   atom    := var | literal | '(' expr ')'
///   var     := 'x' nat
///   literal := int | int '/' nat | 'zeta' nat | 'i'
///
/// When `nvars` is given, any variable index outside [0, nvars) is rejected;
/// otherwise the variable count is inferred from the largest index used.
namespace detail {

constexpr unsigned kParseVars = 32;

class PolyParser {
 public:
  PolyParser(std::string_view src, std::optional<unsigned> nvars)
      : src_(src), fixed_(nvars) {
    if (fixed_ && *fixed_ > kParseVars)
      throw input_error("too many variables (limit " +
                        std::to_string(kParseVars) + ")");
  }

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    unsigned want = fixed_ ? *fixed_ : (saw_var_ ? max_index_ + 1 : 0);
    std::vector<unsigned> identity(kParseVars);
    for (unsigned i = 0; i < kParseVars; ++i) identity[i] = i;
    return p.rename(identity, want);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("syntax error at position " + std::to_string(pos_ + 1) +
                      ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  unsigned long number(const char* what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    if (pos_ - start > 6) fail(std::string(what) + " too large");
    return std::stoul(std::string(src_.substr(start, pos_ - start)));
  }

  Integer integer_literal() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    bool negate = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') negate = (src_[pos_++] == '-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      unsigned long k = number("exponent");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected value");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      if (eat('/')) {
        size_t den_pos = pos_;
        Integer den = Integer(std::to_string(number("denominator")));
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        return Polynomial::constant(kParseVars, Cyclotomic(make_rational(num, den)));
      }
      return Polynomial::constant(kParseVars, Cyclotomic(Rational(num)));
    }
    if (src_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      unsigned long m = number("root order");
      return Polynomial::constant(kParseVars, Cyclotomic::root(static_cast<unsigned>(m)));
    }
    if (c == 'x' && pos_ + 1 < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      size_t at = pos_;
      ++pos_;
      unsigned long idx = number("variable index");
      unsigned limit = fixed_ ? *fixed_ : kParseVars;
      if (idx >= limit) {
        pos_ = at;
        fail("unknown variable x" + std::to_string(idx));
      }
      saw_var_ = true;
      if (idx > max_index_) max_index_ = static_cast<unsigned>(idx);
      return Polynomial::variable(kParseVars, static_cast<unsigned>(idx));
    }
    if (c == 'i' && (pos_ + 1 >= src_.size() ||
                     !std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
      ++pos_;
      return Polynomial::constant(kParseVars, Cyclotomic::root(4));
    }
    fail("expected value");
  }

  std::string_view src_;
  std::optional<unsigned> fixed_;
  size_t pos_ = 0;
  unsigned max_index_ = 0;
  bool saw_var_ = false;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text,
                                   std::optional<unsigned> nvars = std::nullopt) {
  return detail::PolyParser(text, nvars).run();
}

} // namespace nchodge
