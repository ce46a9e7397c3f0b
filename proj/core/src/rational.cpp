#include "trop/rational.hpp"

#include <cctype>

#include "trop/errors.hpp"

namespace trop {

Rational rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("bad rational literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = Rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw ParseError("bad decimal literal '" + std::string(text) + "'");
    mpz_class n(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    q = Rational(n, d);
  } else {
    if (!all_digits(s)) throw ParseError("bad rational literal '" + std::string(text) + "'");
    q = Rational(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace trop
