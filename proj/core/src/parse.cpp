#include "dsg/parse.hpp"

#include <cctype>
#include <string>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : s_(text), R_(ring) {}

  Polynomial parse_all() {
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    auto acc = term();
    for (;;) {
      if (accept('+'))
        acc = R_.add(acc, term());
      else if (accept('-'))
        acc = R_.sub(acc, term());
      else
        return acc;
    }
  }

  Polynomial term() {
    auto acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = R_.mul(acc, unary());
      } else if (accept('/')) {
        auto at = pos_;
        auto d = integer();
        if (sgn(d) == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        Coeff inv;
        try {
          inv = R_.field().from_rational(mpq_class(mpz_class(1), d));
        } catch (const DomainError& e) {
          pos_ = at;
          fail(e.what());
        }
        acc = R_.scale(acc, inv);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return R_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    auto base = atom();
    if (accept('^')) {
      auto at = pos_;
      auto e = integer();
      if (sgn(e) <= 0 || !e.fits_uint_p()) {
        pos_ = at;
        fail("exponent must be a positive integer");
      }
      return R_.pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return R_.constant(R_.field().from_rational(mpq_class(integer())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = R_.variables();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return R_.variable(i);
      pos_ = start;
      throw ParseError("unknown variable '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const PolyRing& R_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_polynomial(text.substr(start, i - start), ring));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace dsg
