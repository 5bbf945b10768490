#include "repdec/rational.hpp"

#include <ostream>

namespace repdec {

Rational Rational::from_string(const std::string& s) {
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    return from_decimal(s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_decimal(const std::string& s) {
  // Parse sign, integer part, fraction part, optional exponent; exact.
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw Error("Rational: bad decimal '" + s + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw Error("Rational: bad decimal '" + s + "'");
    }
  }
  if (!seen_digit) throw Error("Rational: bad decimal '" + s + "'");
  long exp10 = 0;
  if (i < s.size()) {
    exp10 = std::stol(s.substr(i + 1));
  }
  mpz_class num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  mpq_class q(num);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    q *= mpq_class(pow10);
  } else {
    q /= mpq_class(pow10);
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  // FNV-1a over the limbs of numerator and denominator.
  auto mix = [](std::size_t h, const mpz_class& z) {
    const std::size_t kPrime = 1099511628211ull;
    h = (h ^ static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()))) * kPrime;
    std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t k = 0; k < limbs; ++k) {
      h = (h ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), k))) * kPrime;
    }
    return h;
  };
  std::size_t h = 14695981039346656037ull;
  h = mix(h, v_.get_num());
  h = mix(h, v_.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace repdec
