#include "trop/text.hpp"

#include <cctype>

#include "trop/errors.hpp"

namespace trop {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eof() {
    ws();
    return i_ >= s_.size();
  }
  char peek() {
    ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }
  // digits, optionally followed by /digits or .digits (no sign)
  Rational number() {
    ws();
    std::size_t b = i_;
    auto digits = [&] {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    };
    digits();
    if (i_ < s_.size() && (s_[i_] == '/' || s_[i_] == '.')) {
      ++i_;
      digits();
    }
    if (b == i_) fail("expected a number");
    return parse_rational(s_.substr(b, i_ - b));
  }
  unsigned natural() {
    Rational q = number();
    if (q.get_den() != 1 || q < 0 || q > 100000) fail("expected a degree");
    return static_cast<unsigned>(q.get_num().get_ui());
  }
  // number, or parenthesized optionally signed number
  Rational coefficient() {
    if (eat('(')) {
      bool neg = eat('-');
      if (!neg) eat('+');
      Rational q = number();
      expect(')');
      return neg ? Rational(-q) : q;
    }
    return number();
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void finish() {
    if (!eof()) fail("unexpected trailing input");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

struct RawTerm {
  bool negated = false;
  bool balanced = false;
  Rational mag = 0;
  unsigned degree = 0;
};

std::vector<RawTerm> parse_terms(Cursor& cur) {
  std::vector<RawTerm> out;
  if (cur.eof()) cur.fail("empty polynomial");
  bool neg = cur.eat('-');
  if (!neg) cur.eat('+');
  while (true) {
    RawTerm t;
    t.negated = neg;
    bool has_coef = cur.at_number() || cur.peek() == '(';
    if (has_coef) {
      t.mag = cur.coefficient();
      t.balanced = cur.eat('*');
    }
    if (cur.eat('Y')) {
      t.degree = cur.eat('^') ? cur.natural() : 1;
    } else if (!has_coef) {
      cur.fail("expected a term");
    }
    out.push_back(t);
    if (cur.eof()) break;
    if (cur.eat('+'))
      neg = false;
    else if (cur.eat('-'))
      neg = true;
    else
      cur.fail("expected '+' or '-'");
  }
  return out;
}

std::string degree_suffix(unsigned k) {
  if (k == 0) return "";
  return k == 1 ? "Y" : "Y^" + std::to_string(k);
}

std::string_view trimmed(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string mag_text(const Rational& m) { return m < 0 ? "(" + to_string(m) + ")" : to_string(m); }

}  // namespace

GVal parse_gval(std::string_view text) {
  if (trimmed(text) == "-inf") return GVal::bot();
  Cursor cur(text);
  bool neg = cur.eat('-');
  if (!neg) cur.eat('+');
  Rational q = cur.coefficient();
  cur.finish();
  return GVal::fin(neg ? Rational(-q) : q);
}

SVal parse_sval(std::string_view text) {
  Cursor cur(text);
  if (cur.eat('_')) {
    cur.finish();
    return SVal::zero();
  }
  bool neg = cur.eat('-');
  if (!neg) cur.eat('+');
  Rational m = cur.coefficient();
  bool bal = cur.eat('*');
  cur.finish();
  if (bal) return SVal::bal(m);
  return neg ? SVal::neg(m) : SVal::pos(m);
}

TPoly parse_tpoly(std::string_view text) {
  if (trimmed(text) == "-inf") return TPoly();
  Cursor cur(text);
  TPoly p;
  for (const auto& t : parse_terms(cur)) {
    if (t.negated) cur.fail("'-' is not a T_max operation; parenthesize negative coefficients");
    if (t.balanced) cur.fail("balanced coefficients do not exist in T_max");
    p.set(t.degree, t_add(p.coeff(t.degree), GVal::fin(t.mag)));
  }
  return p;
}

SPoly parse_spoly(std::string_view text) {
  Cursor cur(text);
  if (cur.eat('_')) {
    cur.finish();
    return SPoly();
  }
  SPoly p;
  for (const auto& t : parse_terms(cur)) {
    SVal c = t.balanced ? SVal::bal(t.mag) : t.negated ? SVal::neg(t.mag) : SVal::pos(t.mag);
    p.set(t.degree, s_add(p.coeff(t.degree), c));
  }
  return p;
}

PSeries parse_pseries(std::string_view text) {
  Cursor cur(text);
  if (cur.eof()) cur.fail("empty series");
  std::vector<PSeries::Term> terms;
  bool neg = cur.eat('-');
  if (!neg) cur.eat('+');
  while (true) {
    Rational c = 1, e = 0;
    bool has_coef = cur.at_number() || cur.peek() == '(';
    if (has_coef) {
      c = cur.coefficient();
      cur.eat('*');
    }
    if (cur.eat('t')) {
      e = 1;
      if (cur.eat('^')) {
        if (cur.eat('(')) {
          bool en = cur.eat('-');
          e = cur.number();
          if (en) e = -e;
          cur.expect(')');
        } else {
          bool en = cur.eat('-');
          e = cur.number();
          if (en) e = -e;
        }
      }
    } else if (!has_coef) {
      cur.fail("expected a term");
    }
    terms.push_back({neg ? Rational(-c) : c, e});
    if (cur.eof()) break;
    if (cur.eat('+'))
      neg = false;
    else if (cur.eat('-'))
      neg = true;
    else
      cur.fail("expected '+' or '-'");
  }
  return PSeries(std::move(terms));
}

std::vector<PSeries> parse_pseries_list(std::string_view text) {
  std::vector<PSeries> out;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find(';', b);
    if (e == std::string_view::npos) e = text.size();
    std::string_view part = text.substr(b, e - b);
    if (part.find_first_not_of(" \t\r\n") != std::string_view::npos) out.push_back(parse_pseries(part));
    b = e + 1;
  }
  return out;
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "-inf";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    if (!s.empty()) s += " + ";
    if (k > 0 && c == 0) {
      s += degree_suffix(k);
    } else {
      s += mag_text(c);
      if (k > 0) s += " " + degree_suffix(k);
    }
  }
  return s;
}

std::string to_string(const SPoly& p) {
  if (p.is_zero()) return "_";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    bool neg = c.sign() == Sign::Neg, bal = c.sign() == Sign::Bal;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (k > 0 && c.mag() == 0 && !bal) {
      s += degree_suffix(k);
    } else {
      s += mag_text(c.mag());
      if (bal) s += "*";
      if (k > 0) s += " " + degree_suffix(k);
    }
  }
  return s;
}

}  // namespace trop
