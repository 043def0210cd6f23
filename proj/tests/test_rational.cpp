#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgg/rational.hpp"

using bgg::BigInt;
using bgg::Rational;

namespace {

// deterministic 64-bit generator, independent of libstdc++ distributions
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long ll(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (m) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

TEST_CASE("bigint matches 128-bit arithmetic on random values") {
  Rng rng(7);
  for (int iter = 0; iter < 4000; ++iter) {
    long long a = rng.ll(-1000000000000LL, 1000000000000LL);
    long long b = rng.ll(-1000000000000LL, 1000000000000LL);
    BigInt A(a), B(b);
    CHECK((A + B).to_string() == i128_str(static_cast<__int128>(a) + b));
    CHECK((A - B).to_string() == i128_str(static_cast<__int128>(a) - b));
    CHECK((A * B).to_string() == i128_str(static_cast<__int128>(a) * b));
    if (b != 0) {
      CHECK((A / B).to_string() == i128_str(static_cast<__int128>(a) / b));
      CHECK((A % B).to_string() == i128_str(static_cast<__int128>(a) % b));
    }
    CHECK((A < B) == (a < b));
    CHECK((A == B) == (a == b));
  }
}

TEST_CASE("bigint multi-limb multiplication and division round-trip") {
  Rng rng(11);
  for (int iter = 0; iter < 800; ++iter) {
    // build large operands as products of random long longs
    BigInt a(1), b(1);
    int na = 1 + static_cast<int>(rng.next() % 4);
    int nb = 1 + static_cast<int>(rng.next() % 4);
    for (int i = 0; i < na; ++i) a = a * BigInt(rng.ll(-2000000000LL, 2000000000LL) | 1);
    for (int i = 0; i < nb; ++i) b = b * BigInt(rng.ll(1, 2000000000LL));
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    // |r| < |b|
    CHECK(BigInt::abs(r) < BigInt::abs(b));
    // sign convention: r has the sign of a (or is zero)
    if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
  }
}

TEST_CASE("bigint division stress near limb boundaries") {
  // operands engineered to exercise the add-back branch region
  BigInt two64 = BigInt(1LL << 32) * BigInt(1LL << 32);
  for (int i = -3; i <= 3; ++i) {
    for (int j = 1; j <= 5; ++j) {
      BigInt a = two64 * two64 * BigInt(7) + two64 * BigInt(i) + BigInt(j);
      BigInt b = two64 * BigInt(j) + BigInt(i);
      if (b.is_zero()) continue;
      BigInt q, r;
      BigInt::divmod(a, b, q, r);
      CHECK(q * b + r == a);
      CHECK(BigInt::abs(r) < BigInt::abs(b));
    }
  }
  // force the qhat = 2^64 - 1 branch: top dividend limb equals the top
  // divisor limb after normalization
  BigInt beta_m1 = two64 - BigInt(1);
  for (long long low : {0LL, 1LL, 5LL, (1LL << 62)}) {
    BigInt v = two64 * (two64 / BigInt(2)) + BigInt(low);  // top bit set
    for (const BigInt& a :
         {v * beta_m1 + (v - BigInt(1)), v * beta_m1, v * beta_m1 + BigInt(1),
          v * two64 - BigInt(1), v * v - BigInt(1), v * v + v - BigInt(1)}) {
      BigInt q, r;
      BigInt::divmod(a, v, q, r);
      CHECK(q * v + r == a);
      CHECK(BigInt::abs(r) < v);
    }
  }
}

TEST_CASE("bigint string round-trip") {
  Rng rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    BigInt a(1);
    for (int i = 0; i < 5; ++i) a = a * BigInt(rng.ll(-3000000000LL, 3000000000LL) | 1);
    CHECK(BigInt::from_string(a.to_string()) == a);
  }
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt::from_string("-0").to_string() == "0");
}

TEST_CASE("bigint gcd") {
  Rng rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    long long a = rng.ll(-100000, 100000), b = rng.ll(-100000, 100000);
    long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(g));
  }
}

TEST_CASE("rational field axioms on random samples") {
  Rng rng(23);
  auto rnd = [&rng]() { return Rational(rng.ll(-40, 40), rng.ll(1, 23)); };
  for (int iter = 0; iter < 1500; ++iter) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("rational ordering and reduction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 1).is_integer());
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(3, 6).to_string() == "1/2");
  CHECK(Rational(-14, 7).to_string() == "-2");
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("12") == Rational(12));
  CHECK_THROWS(Rational(1, 0));
}
