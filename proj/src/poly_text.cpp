#include "contact/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "contact/error.hpp"

namespace contact {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  SparsePoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ContactError(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) +
                                             " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    SparsePoly acc(vars_.size());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    SparsePoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        const BigInt d = integer();
        if (sgn(d) == 0) fail("division by zero");
        acc *= Rational(BigInt(1), d);
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    SparsePoly base = primary();
    if (accept('^')) {
      skip_ws();
      const BigInt e = integer();
      if (!e.fits_uint_p() || e > 1024) fail("exponent out of range");
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  SparsePoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return SparsePoly::constant(vars_.size(), Rational(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return SparsePoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (sgn(den) == 0) throw ContactError(ErrorCode::Parse, "zero denominator in " + s);
    Rational q(BigInt(s.substr(0, slash)), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ContactError(ErrorCode::Parse, "not a rational number: '" + s + "'");
  }
}

std::string format_poly(const SparsePoly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.num_vars()) {
    throw ContactError(ErrorCode::MismatchedVars, "variable name count does not match ring");
  }
  if (p.is_zero()) return "0";
  // Highest degree first, lexicographically earliest first within a degree.
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
    }
    const bool unit = mag == 1;
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace contact
