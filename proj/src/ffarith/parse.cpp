#include "drinfeld/parse.hpp"

#include <cctype>
#include <string>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const FqPtr& field, char var)
      : src_(src), F_(field), var_(var) {}

  std::map<int, PolyA> parse() {
    std::map<int, PolyA> out;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [var_exp, poly] = term();
      if (negate) poly = -poly;
      auto it = out.find(var_exp);
      if (it == out.end()) {
        out.emplace(var_exp, std::move(poly));
      } else {
        it->second += poly;
      }
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = peek() == '-';
      ++pos_;
    }
    for (auto it = out.begin(); it != out.end();) {
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
  }

 private:
  std::pair<int, PolyA> term() {
    FqElem coeff = F_->one();
    int t_exp = 0;
    int var_exp = 0;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const long n = integer();
        if (n >= static_cast<long>(F_->p())) {
          fail_at("coefficient " + std::to_string(n) + " out of range for p = " +
                      std::to_string(F_->p()),
                  start);
        }
        coeff = F_->mul(coeff, F_->from_int(n));
      } else if (c == 'T') {
        ++pos_;
        t_exp += exponent();
      } else if (var_ != '\0' && c == var_) {
        ++pos_;
        var_exp += exponent();
      } else if (c == 'a' && F_->e() > 1) {
        ++pos_;
        coeff = F_->mul(coeff, F_->exp(exponent()));
      } else {
        fail_at(std::string("unknown symbol '") + c + "'", start);
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {var_exp, PolyA::monomial(F_, coeff, t_exp)};
  }

  int exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected exponent after '^'");
    }
    const long n = integer();
    if (n > 100000) fail("exponent too large");
    return static_cast<int>(n);
  }

  long integer() {
    long n = 0;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (peek() - '0');
      if (n > 1'000'000'000L) fail_at("integer literal too large", start);
      ++pos_;
    }
    return n;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  std::string_view src_;
  const FqPtr& F_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyA parse_poly(std::string_view src, const FqPtr& field) {
  auto parts = Parser(src, field, '\0').parse();
  if (parts.empty()) return PolyA::zero(field);
  return parts.begin()->second;
}

std::map<int, PolyA> parse_bivariate(std::string_view src, const FqPtr& field, char var) {
  return Parser(src, field, var).parse();
}

}  // namespace drinfeld
