#include "owct/rational.hpp"

#include <cctype>

namespace owct {

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
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("empty number: '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("bad rational: '" + std::string(text) + "'");
    BigInt d(std::string(den));
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty() || !all_digits(fp) || (!ip.empty() && !all_digits(ip)))
      throw ParseError("bad decimal: '" + std::string(text) + "'");
    BigInt scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    value = Rational(whole * scale + BigInt(std::string(fp)), scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad number: '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) { return Rational(x); }

BigInt floor_rat(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt quo = n / d;  // truncates toward zero
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

BigInt ceil_rat(const Rational& q) { return -floor_rat(-q); }

Rational pow2(int k) {
  if (k >= 0) return Rational(BigInt(1) << k);
  return Rational(BigInt(1), BigInt(1) << (-k));
}

}  // namespace owct
