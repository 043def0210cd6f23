#include "bgg/rational.hpp"

#include <algorithm>
#include <ostream>

namespace bgg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  u64 m = v > 0 ? static_cast<u64>(v) : (~static_cast<u64>(v) + 1);
  mag_.push_back(m);
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  const std::vector<u64>& x = a.size() >= b.size() ? a : b;
  const std::vector<u64>& y = a.size() >= b.size() ? b : a;
  std::vector<u64> r(x.size(), 0);
  u64 carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    u64 yi = i < y.size() ? y[i] : 0;
    u64 s = x[i] + yi;
    u64 c1 = s < x[i];
    u64 s2 = s + carry;
    u64 c2 = s2 < s;
    r[i] = s2;
    carry = c1 | c2;
  }
  if (carry) r.push_back(1);
  return r;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> r(a.size(), 0);
  u64 borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u64 bi = i < b.size() ? b[i] : 0;
    u64 d = a[i] - bi;
    u64 c1 = a[i] < bi;
    u64 d2 = d - borrow;
    u64 c2 = d < borrow;
    r[i] = d2;
    borrow = c1 | c2;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    u64 carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      u128 t = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    r[i + b.size()] += carry;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

namespace {

std::vector<u64> shl_bits(const std::vector<u64>& a, unsigned s) {
  if (s == 0 || a.empty()) {
    std::vector<u64> r = a;
    r.push_back(0);
    return r;
  }
  std::vector<u64> r(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] |= a[i] << s;
    r[i + 1] = a[i] >> (64 - s);
  }
  return r;
}

std::vector<u64> shr_bits(const std::vector<u64>& a, unsigned s) {
  std::vector<u64> r(a.size(), 0);
  if (s == 0) {
    r = a;
  } else {
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size()) r[i] |= a[i + 1] << (64 - s);
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

// Knuth algorithm D on 64-bit limbs.
void BigInt::divmod_mag(const std::vector<u64>& a, const std::vector<u64>& b,
                        std::vector<u64>& q, std::vector<u64>& r) {
  q.clear();
  r.clear();
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    q.assign(a.size(), 0);
    u128 rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      u128 cur = (rem << 64) | a[i];
      q[i] = static_cast<u64>(cur / b[0]);
      rem = cur % b[0];
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u64 rv = static_cast<u64>(rem);
    if (rv) r.push_back(rv);
    return;
  }

  unsigned s = static_cast<unsigned>(__builtin_clzll(b.back()));
  std::vector<u64> u = shl_bits(a, s);  // has one extra high limb
  std::vector<u64> v = shl_bits(b, s);
  while (!v.empty() && v.back() == 0) v.pop_back();
  const size_t n = v.size();
  const size_t m = u.size() - 1 - n;
  q.assign(m + 1, 0);

  const u64 vtop = v[n - 1];
  const u64 vsec = v[n - 2];
  for (size_t j = m + 1; j-- > 0;) {
    u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
    u64 qhat;
    u128 rhat;
    if (static_cast<u64>(num >> 64) >= vtop) {
      qhat = ~static_cast<u64>(0);
      rhat = num - static_cast<u128>(qhat) * vtop;
    } else {
      qhat = static_cast<u64>(num / vtop);
      rhat = num % vtop;
    }
    // refine while the two-limb test overshoots; once rhat reaches 2^64 the
    // test is certainly false
    while ((rhat >> 64) == 0 &&
           static_cast<u128>(qhat) * vsec > ((rhat << 64) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // multiply-subtract
    u128 borrow = 0, carry = 0;
    for (size_t i = 0; i < n; ++i) {
      u128 p = static_cast<u128>(qhat) * v[i] + carry;
      carry = p >> 64;
      u64 plo = static_cast<u64>(p);
      u64 cur = u[i + j];
      u64 d = cur - plo;
      u64 bor1 = cur < plo;
      u64 d2 = d - static_cast<u64>(borrow);
      u64 bor2 = d < static_cast<u64>(borrow);
      u[i + j] = d2;
      borrow = bor1 | bor2;
    }
    u128 top = static_cast<u128>(u[j + n]) - carry - borrow;
    u[j + n] = static_cast<u64>(top);
    if (static_cast<u64>(top >> 64) != 0) {
      // qhat was one too large: add back
      --qhat;
      u64 c = 0;
      for (size_t i = 0; i < n; ++i) {
        u64 sum = u[i + j] + v[i];
        u64 c1 = sum < u[i + j];
        u64 sum2 = sum + c;
        u64 c2 = sum2 < sum;
        u[i + j] = sum2;
        c = c1 | c2;
      }
      u[j + n] += c;
    }
    q[j] = qhat;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  u.resize(n);
  r = shr_bits(u, s);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt res;
  if (a.sign_ == b.sign_) {
    res.sign_ = a.sign_;
    res.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      res.sign_ = a.sign_;
      res.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      res.sign_ = b.sign_;
      res.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  res.trim();
  return res;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt res;
  if (a.sign_ == 0 || b.sign_ == 0) return res;
  res.sign_ = a.sign_ * b.sign_;
  res.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  res.trim();
  return res;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<u64> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::abs(const BigInt& a) {
  BigInt r = a;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return BigInt(0);
  return a;
}

bool BigInt::fits_ll() const {
  if (mag_.size() > 1) return false;
  if (mag_.empty()) return true;
  if (sign_ > 0) return mag_[0] <= static_cast<u64>(INT64_MAX);
  return mag_[0] <= static_cast<u64>(INT64_MAX) + 1;
}

long long BigInt::to_ll() const {
  if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
  if (mag_.empty()) return 0;
  if (sign_ > 0) return static_cast<long long>(mag_[0]);
  return static_cast<long long>(~mag_[0] + 1);
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  size_t i = 0;
  int sg = 1;
  if (s[0] == '-') {
    sg = -1;
    i = 1;
  } else if (s[0] == '+') {
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r(0);
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (sg < 0) r = -r;
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<u64> cur = mag_;
  std::string digits;
  const u64 chunk = 10000000000000000000ULL;  // 10^19
  std::vector<u64> base{chunk};
  while (!cur.empty()) {
    std::vector<u64> q, r;
    divmod_mag(cur, base, q, r);
    u64 rem = r.empty() ? 0 : r[0];
    std::string part = std::to_string(rem);
    if (!q.empty()) part = std::string(19 - part.size(), '0') + part;
    digits = part + digits;
    cur = std::move(q);
  }
  return (sign_ < 0 ? "-" : "") + digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace bgg
