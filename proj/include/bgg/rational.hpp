#ifndef BGG_RATIONAL_HPP
#define BGG_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace bgg {

/// Arbitrary-precision signed integer, little-endian base 2^64 magnitude.
///
/// Only the operations needed for exact rational linear algebra are
/// provided: ring arithmetic, divmod, gcd, comparisons and decimal I/O.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  /// Value as long long; throws if out of range.
  long long to_ll() const;
  bool fits_ll() const;

  std::string to_string() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  /// Truncated division (C semantics: quotient rounds toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(BigInt a, BigInt b);
  static BigInt abs(const BigInt& a);

private:
  int sign_ = 0;
  std::vector<std::uint64_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  static void divmod_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                         std::vector<std::uint64_t>& q, std::vector<std::uint64_t>& r);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational number.  Always stored reduced with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(long long n, long long d);
  Rational(BigInt n, BigInt d);
  explicit Rational(const BigInt& n) : num_(n), den_(1) {}

  /// Parses "n", "n/d", with optional leading '-'.
  static Rational from_string(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const;
  bool is_negative() const { return num_.is_negative(); }
  int sign() const { return num_.sign(); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  BigInt num_, den_;
  void reduce();
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace bgg

namespace Eigen {
template <>
struct NumTraits<bgg::Rational> : GenericNumTraits<bgg::Rational> {
  typedef bgg::Rational Real;
  typedef bgg::Rational NonInteger;
  typedef bgg::Rational Nested;
  typedef bgg::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return bgg::Rational(0); }
  static inline Real dummy_precision() { return bgg::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
