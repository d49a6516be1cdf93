#include "projlab/report/rational.hpp"

#include "projlab/error.hpp"

namespace projlab {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw DomainError("not a rational number: '" + text + "'");
  Integer v(body, 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("not a rational number: '" + text + "'");
    Integer den(den_text, 10);
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational r(parse_integer(text.substr(0, slash)), den);
    r.canonicalize();
    return r;
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw DomainError("not a rational number: '" + text + "'");
    std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = parse_integer(whole);
    Integer f(frac, 10);
    Integer num = negative ? Integer(w * scale - f) : Integer(w * scale + f);
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text));
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = r < 0;
  Rational a = negative ? Rational(-r) : r;
  Rational scaled = a * scale + Rational(1, 2);
  Integer n = scaled.get_num() / scaled.get_den();
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && n != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace projlab
