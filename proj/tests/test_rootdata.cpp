#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bgg/errors.hpp"
#include "bgg/root_system.hpp"

using namespace bgg;

namespace {

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
};

std::vector<WeylWord> all_weyl(int rank) {
  std::vector<int> p(static_cast<size_t>(rank) + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylWord> out;
  do {
    WeylWord w;
    w.perm = p;
    out.push_back(w);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("root system construction") {
  for (int rank = 1; rank <= 4; ++rank) {
    RootSystem rs = build_root_system(rank);
    CHECK(static_cast<int>(rs.positive_roots.size()) == rank * (rank + 1) / 2);
    for (int i = 0; i < rank; ++i) {
      CHECK(rs.rho(i) == Rational(1));
      CHECK(rs.cartan(i, i) == 2);
      if (i + 1 < rank) CHECK(rs.cartan(i, i + 1) == -1);
    }
    // every root has squared length 2
    for (const Weight& a : rs.positive_roots) CHECK(form(rs, a, a) == Rational(2));
    // positive roots are nonnegative integer sums of simple roots (by spans)
    for (size_t r = 0; r < rs.spans.size(); ++r) {
      Weight sum = Weight::Zero(rank);
      for (int j = rs.spans[r].first; j <= rs.spans[r].second; ++j)
        sum += rs.simple_roots[static_cast<size_t>(j - 1)];
      CHECK(sum == rs.positive_roots[r]);
    }
  }
  CHECK_THROWS_AS(build_root_system(0), ParseError);
  CHECK_THROWS_AS(build_root_system(8), ParseError);
}

TEST_CASE("A_3 Weyl group order") {
  RootSystem rs = build_root_system(3);
  CHECK(all_weyl(3).size() == 24);
}

TEST_CASE("word length equals inversions on roots") {
  RootSystem rs = build_root_system(3);
  for (const WeylWord& w : all_weyl(3)) {
    CHECK(w.length() == inversions_on_roots(rs, w));
    CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
    // reduced word reproduces the permutation
    CHECK(WeylWord::from_word(3, w.reduced_word()) == w);
  }
}

TEST_CASE("affine action fixed cases") {
  RootSystem rs = build_root_system(2);
  WeylWord id = WeylWord::identity(2);
  CHECK(affine_action(rs, id, make_weight({3, 5})) == make_weight({3, 5}));

  WeylWord s1 = WeylWord::simple(2, 1);
  // wall fixed point: lam_1 = -1
  CHECK(affine_action(rs, s1, make_weight({-1, 4})) == make_weight({-1, 4}));
  // s_1 . 0 = -alpha_1
  CHECK(affine_action(rs, s1, make_weight({0, 0})) == make_weight({-2, 1}));
}

TEST_CASE("affine action rejects mismatched shapes") {
  RootSystem rs = build_root_system(2);
  CHECK_THROWS_AS(affine_action(rs, WeylWord::identity(2), make_weight({1, 2, 3})), ParseError);
  CHECK_THROWS_AS(form(rs, make_weight({1}), make_weight({1, 2})), ParseError);
}

TEST_CASE("affine action is a group action") {
  RootSystem rs = build_root_system(3);
  Rng rng(31);
  auto words = all_weyl(3);
  for (int iter = 0; iter < 200; ++iter) {
    const WeylWord& a = words[rng.next() % words.size()];
    const WeylWord& b = words[rng.next() % words.size()];
    Weight lam = Weight::Zero(3);
    for (int i = 0; i < 3; ++i)
      lam(i) = Rational(static_cast<long long>(rng.next() % 9) - 4,
                        1 + static_cast<long long>(rng.next() % 2));
    CHECK(affine_action(rs, a * b, lam) == affine_action(rs, a, affine_action(rs, b, lam)));
  }
}

TEST_CASE("form is Weyl invariant") {
  RootSystem rs = build_root_system(3);
  Rng rng(37);
  auto words = all_weyl(3);
  for (int iter = 0; iter < 100; ++iter) {
    const WeylWord& w = words[rng.next() % words.size()];
    Weight mu = Weight::Zero(3), nu = Weight::Zero(3);
    for (int i = 0; i < 3; ++i) {
      mu(i) = Rational(static_cast<long long>(rng.next() % 11) - 5);
      nu(i) = Rational(static_cast<long long>(rng.next() % 11) - 5);
    }
    CHECK(form(rs, weyl_apply(rs, w, mu), weyl_apply(rs, w, nu)) == form(rs, mu, nu));
  }
}

TEST_CASE("regularity of infinitesimal character") {
  RootSystem rs2 = build_root_system(2);
  CHECK(character_is_regular(rs2, make_weight({0, 0})));
  CHECK(!character_is_regular(rs2, make_weight({-1, 0})));
  RootSystem rs3 = build_root_system(3);
  // lam = (w+k, l, k) with w = -1-k is singular; try k=2, l=1, so w=-3
  CHECK(!character_is_regular(rs3, make_weight({-1, 1, 2})));
}

namespace {

// independent oracle: enumerate cosets W_l w explicitly, take the shortest
// element of each coset
std::set<std::vector<int>> coset_min_reps(int rank, const std::vector<int>& crossed) {
  auto words = all_weyl(rank);
  // levi subgroup: generated by uncrossed nodes
  std::vector<WeylWord> levi{WeylWord::identity(rank)};
  {
    std::set<std::vector<int>> seen{levi[0].perm};
    std::vector<WeylWord> frontier = levi;
    while (!frontier.empty()) {
      std::vector<WeylWord> next;
      for (const WeylWord& w : frontier) {
        for (int i = 1; i <= rank; ++i) {
          if (std::find(crossed.begin(), crossed.end(), i) != crossed.end()) continue;
          WeylWord v = WeylWord::simple(rank, i) * w;
          if (seen.insert(v.perm).second) {
            next.push_back(v);
            levi.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  std::set<std::vector<int>> reps;
  std::set<std::vector<int>> covered;
  for (const WeylWord& w : words) {
    if (covered.count(w.perm)) continue;
    // coset W_l w
    std::vector<WeylWord> coset;
    for (const WeylWord& u : levi) coset.push_back(u * w);
    const WeylWord* best = &coset[0];
    for (const WeylWord& c : coset) {
      if (c.length() < best->length()) best = &c;
    }
    for (const WeylWord& c : coset) covered.insert(c.perm);
    reps.insert(best->perm);
  }
  return reps;
}

}  // namespace

TEST_CASE("hasse quotient against coset enumeration oracle") {
  struct Case {
    int rank;
    std::vector<int> crossed;
  };
  for (const Case& c : {Case{2, {1}}, Case{2, {1, 2}}, Case{3, {1, 2}}, Case{3, {2}},
                        Case{3, {1, 3}}, Case{4, {2, 4}}}) {
    RootSystem rs = build_root_system(c.rank);
    auto graded = hasse_quotient(rs, c.crossed);
    std::set<std::vector<int>> got;
    for (const auto& g : graded)
      for (const WeylWord& w : g) got.insert(w.perm);
    CHECK(got == coset_min_reps(c.rank, c.crossed));
    // grade 0 is the identity
    REQUIRE(!graded.empty());
    REQUIRE(graded[0].size() == 1);
    CHECK(graded[0][0].is_identity());
    for (size_t len = 0; len < graded.size(); ++len)
      for (const WeylWord& w : graded[len]) CHECK(w.length() == static_cast<int>(len));
  }
}

TEST_CASE("hasse quotient fixed cases") {
  RootSystem rs2 = build_root_system(2);
  auto g = hasse_quotient(rs2, {1});
  REQUIRE(g.size() == 3);
  CHECK(g[0].size() == 1);
  CHECK(g[1].size() == 1);
  CHECK(g[2].size() == 1);
  CHECK(g[1][0].reduced_word() == std::vector<int>{1});
  CHECK(g[2][0].reduced_word() == std::vector<int>{1, 2});

  // trivial quotient
  for (int rank = 1; rank <= 3; ++rank) {
    RootSystem rs = build_root_system(rank);
    auto t = hasse_quotient(rs, {});
    size_t total = 0;
    for (const auto& grade : t) total += grade.size();
    CHECK(total == 1);
  }

  RootSystem rs3 = build_root_system(3);
  auto h = hasse_quotient(rs3, {1, 2});
  size_t total = 0;
  int maxlen = 0;
  for (size_t len = 0; len < h.size(); ++len) {
    total += h[len].size();
    if (!h[len].empty()) maxlen = static_cast<int>(len);
  }
  CHECK(total == 12);
  CHECK(maxlen == 5);
}

TEST_CASE("affine orbit of hasse words is free on regular dominant weights") {
  RootSystem rs = build_root_system(3);
  for (const Weight& lam : {make_weight({0, 0, 0}), make_weight({1, 0, 2}), make_weight({2, 1, 1})}) {
    auto graded = hasse_quotient(rs, {1, 2});
    std::set<std::string> seen;
    for (const auto& grade : graded) {
      for (const WeylWord& w : grade) {
        CHECK(seen.insert(weight_str(affine_action(rs, w, lam))).second);
      }
    }
  }
}

TEST_CASE("relative hasse quotient inside a Levi subsystem") {
  // ambient A_3, subsystem on nodes {2,3}, levi of q at node {3}
  RootSystem rs = build_root_system(3);
  auto g = hasse_quotient_in(rs, {2, 3}, {3});
  REQUIRE(g.size() == 3);
  CHECK(g[0].size() == 1);
  CHECK(g[1].size() == 1);
  CHECK(g[2].size() == 1);
  CHECK(g[1][0].reduced_word() == std::vector<int>{2});
  CHECK(g[2][0].reduced_word() == std::vector<int>{2, 3});
}
