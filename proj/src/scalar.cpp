#include "rgspectra/scalar.hpp"

#include "rgspectra/error.hpp"

namespace rgspectra {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty number");
  const auto dot = text.find('.');
  const bool has_exp = text.find_first_of("eE") != std::string::npos;
  if (has_exp) throw Error(Errc::parse_error, "exponent notation is not exact: " + text);
  try {
    if (dot == std::string::npos) {
      Rational q(text, 10);
      q.canonicalize();
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t decimals = text.size() - dot - 1;
    if (digits == "-" || digits == "+" || digits.empty()) throw Error(Errc::parse_error, text);
    if (digits.front() == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < decimals; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "not a rational literal: " + text);
  }
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational pow2_inv(unsigned n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  return Rational(mpz_class(1), den);
}

}  // namespace rgspectra
