#include "qv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "qv/error.hpp"

namespace qv {
namespace {

using Terms = std::map<std::vector<int>, std::int64_t>;

Terms add(Terms a, const Terms& b, std::int64_t sign) {
  for (const auto& [e, c] : b) {
    auto& slot = a[e];
    slot += sign * c;
    if (slot == 0) a.erase(e);
  }
  return a;
}

Terms mul(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto& slot = out[e];
      slot += c1 * c2;
      if (slot == 0) out.erase(e);
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    auto it = std::find(vars_.begin(), vars_.end(), "w");
    w_index_ = it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
  }

  Terms parse() {
    Terms t = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  Terms constant(std::int64_t c) const {
    Terms t;
    if (c != 0) t[std::vector<int>(vars_.size(), 0)] = c;
    return t;
  }

  Terms expression() {
    Terms acc;
    std::int64_t sign = 1;
    auto c = peek();
    if (c == '+' || c == '-') {
      sign = *c == '-' ? -1 : 1;
      ++pos_;
    }
    acc = add(acc, product(), sign);
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      acc = add(acc, product(), *c == '-' ? -1 : 1);
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
  }

  Terms product() {
    Terms acc = power();
    while (true) {
      auto c = peek();
      if (c == '*') {
        ++pos_;
        acc = mul(acc, power());
      } else if (c && (*c == '(' || std::isalpha(static_cast<unsigned char>(*c)))) {
        acc = mul(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Terms power() {
    std::size_t base_pos = pos_;
    Terms base = primary();
    if (peek() != '^') return base;
    ++pos_;
    std::int64_t sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    std::int64_t e = integer();
    if (sign > 0) {
      Terms result = constant(1);
      for (std::int64_t i = 0; i < e; ++i) result = mul(result, base);
      return result;
    }
    // Negative powers only for a unit monomial in w.
    if (base.size() != 1 || std::abs(base.begin()->second) != 1) {
      pos_ = base_pos;
      fail("negative exponent allowed only on w");
    }
    const auto& exps = base.begin()->first;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (static_cast<int>(i) != w_index_ && exps[i] != 0) {
        pos_ = base_pos;
        fail("negative exponent allowed only on w");
      }
    std::vector<int> out_exps = exps;
    if (w_index_ >= 0) out_exps[w_index_] *= -static_cast<int>(e);
    std::int64_t coeff = (base.begin()->second < 0 && (e % 2 == 1)) ? -1 : 1;
    return Terms{{out_exps, coeff}};
  }

  Terms primary() {
    auto c = peek();
    if (!c) fail("unexpected end of expression");
    if (*c == '(') {
      ++pos_;
      Terms inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (*c == '-') {
      ++pos_;
      return add(Terms{}, power(), -1);
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) return constant(integer());
    if (std::isalpha(static_cast<unsigned char>(*c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      std::vector<int> e(vars_.size(), 0);
      e[it - vars_.begin()] = 1;
      return Terms{{e, 1}};
    }
    fail("unexpected character '" + std::string(1, *c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  int w_index_ = -1;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Parser parser(text, vars);
  return ParsedPoly{vars, parser.parse()};
}

IntLaurent parse_laurent(std::string_view text) {
  static const std::vector<std::string> vars{"w"};
  ParsedPoly parsed = parse_polynomial(text, vars);
  IntLaurent out(0);
  for (const auto& [e, c] : parsed.terms) out += IntLaurent::monomial(c, e[0]);
  return out;
}

}  // namespace qv
