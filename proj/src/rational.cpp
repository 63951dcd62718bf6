#include "fglab/rational.hpp"

#include <cctype>

#include "fglab/error.hpp"

namespace fglab {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInteger parse_integer(std::string_view s) {
  if (!is_decimal_integer(s))
    throw Error(Errc::ParseError, "not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInteger(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInteger& numerator, const BigInteger& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw Error(Errc::ParseError, "signed denominator in '" + std::string(text) + "'");
  return BigRational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

bool is_p_local(const BigRational& q, long p) {
  return mpz_divisible_ui_p(q.raw().get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fglab
