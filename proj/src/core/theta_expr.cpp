#include "core/theta_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qwtrap {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  double parse() {
    const double v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (!std::isfinite(v)) fail("expression does not evaluate to a finite value");
    return v;
  }

 private:
  double expression() {
    double v = term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        v += term();
      } else if (consume('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      skip_space();
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    skip_space();
    if (consume('-')) return -factor();
    if (consume('(')) {
      const double v = expression();
      expect(')');
      return v;
    }
    if (match_word("pi")) return M_PI;
    if (match_word("sqrt")) {
      skip_space();
      expect('(');
      const double v = expression();
      expect(')');
      return std::sqrt(v);
    }
    return number();
  }

  double number() {
    skip_space();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  bool match_word(const char* word) {
    skip_space();
    std::size_t len = 0;
    while (word[len] != '\0') ++len;
    if (text_.compare(pos_, len, word) != 0) return false;
    const std::size_t after = pos_ + len;
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad theta expression '" + text_ + "': " + why +
                                " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

double eval_theta(const std::string& text) { return Parser(text).parse(); }

}  // namespace qwtrap
