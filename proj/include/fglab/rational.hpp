#ifndef FGLAB_RATIONAL_HPP
#define FGLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace fglab {

using BigInteger = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInteger& value) : value_(value) {}
  BigRational(const BigInteger& numerator, const BigInteger& denominator);

  /// Parses "n" or "n/d" in decimal. Throws Error(ParseError) on bad input
  /// and Error(DivisionByZero) on a zero denominator.
  static BigRational parse(std::string_view text);

  BigInteger numerator() const { return value_.get_num(); }
  BigInteger denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", the denominator omitted when it is 1.
  std::string to_string() const;

  BigRational operator-() const { return BigRational(mpq_class(-value_)); }
  BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
  BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
  BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.to_string();
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// True iff p does not divide the denominator.
bool is_p_local(const BigRational& q, long p);

bool is_prime(long n);

}  // namespace fglab

#endif  // FGLAB_RATIONAL_HPP
