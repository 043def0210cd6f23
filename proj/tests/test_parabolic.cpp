#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/errors.hpp"
#include "bgg/parabolic.hpp"

using namespace bgg;

TEST_CASE("pair dimension counts") {
  RootSystem rs3 = build_root_system(3);
  ParabolicPair pair = build_pair(rs3, {1}, {1, 2});
  CHECK(pair.dim_p_plus() == 3);
  CHECK(pair.dim_q_plus() == 5);
  CHECK(pair.dim_rel() == 2);

  ParabolicPair same = build_pair(rs3, {1, 3}, {1, 3});
  CHECK(same.dim_rel() == 0);

  RootSystem rs2 = build_root_system(2);
  ParabolicPair abs = build_pair(rs2, {}, {1});
  CHECK(abs.dim_p_plus() == 0);
  CHECK(abs.dim_q_plus() == 2);
  CHECK(abs.dim_rel() == 2);

  CHECK_THROWS_AS(build_pair(rs3, {2}, {1}), ParseError);
}

TEST_CASE("relative basis ordered by grading then root order") {
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {}, {1, 2});
  REQUIRE(pair.dim_rel() == 5);
  for (size_t i = 0; i + 1 < pair.grade_rel.size(); ++i) {
    CHECK(pair.grade_rel[i] <= pair.grade_rel[i + 1]);
  }
  // grading of a bracket adds
  for (size_t a = 0; a < pair.roots_rel.size(); ++a) {
    for (size_t b = 0; b < pair.roots_rel.size(); ++b) {
      QMat br = bracket(mat_e(rs, pair.roots_rel[a]), mat_e(rs, pair.roots_rel[b]));
      if (is_zero(br)) continue;
      AlgebraCoords c = algebra_coords(rs, br);
      for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        if (!c.e(static_cast<Eigen::Index>(r)).is_zero()) {
          CHECK(root_grade(rs, static_cast<int>(r), pair.crossed_q) ==
                pair.grade_rel[a] + pair.grade_rel[b]);
        }
      }
    }
  }
}

TEST_CASE("structural verification of pairs") {
  RootSystem rs3 = build_root_system(3);
  verify_pair(build_pair(rs3, {1}, {1, 2}));
  verify_pair(build_pair(rs3, {}, {1, 2}));
  verify_pair(build_pair(rs3, {2}, {2, 3}));
  RootSystem rs2 = build_root_system(2);
  verify_pair(build_pair(rs2, {}, {1}));
  verify_pair(build_pair(rs2, {1}, {1, 2}));
}

TEST_CASE("levi blocks") {
  RootSystem rs3 = build_root_system(3);
  auto blocks = levi_blocks(build_pair(rs3, {1}, {1, 2}));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].lo == 2);
  CHECK(blocks[0].hi == 3);
  CHECK(blocks[0].sub.rank == 2);

  auto borel = levi_blocks(build_pair(rs3, {1, 2, 3}, {1, 2, 3}));
  CHECK(borel.empty());

  auto full = levi_blocks(build_pair(rs3, {}, {1}));
  REQUIRE(full.size() == 1);
  CHECK(full[0].lo == 1);
  CHECK(full[0].hi == 3);

  auto split = levi_blocks(build_pair(rs3, {2}, {2}));
  REQUIRE(split.size() == 2);
  CHECK(split[0].lo == 1);
  CHECK(split[0].hi == 1);
  CHECK(split[1].lo == 3);
  CHECK(split[1].hi == 3);
}

TEST_CASE("grading element evaluates relative grades on roots") {
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {1}, {1, 2});
  for (size_t i = 0; i < pair.roots_rel.size(); ++i) {
    Rational g = pair.grade_of(rs.positive_roots[static_cast<size_t>(pair.roots_rel[i])]);
    CHECK(g == Rational(pair.grade_rel[i]));
  }
  // p_+ roots have relative grade equal to their q-grade minus p-contribution;
  // the grading element only sees crossed-q-not-p nodes
  CHECK(pair.grade_of(rs.positive_roots[0]) == Rational(0));  // alpha_1
}

TEST_CASE("pair spec string round-trip") {
  PairSpec s = parse_pair_spec("A3 p=1 q=1,2");
  CHECK(s.rank == 3);
  CHECK(s.crossed_p == std::vector<int>{1});
  CHECK(s.crossed_q == std::vector<int>{1, 2});
  CHECK(render_pair_spec(s) == "A3 p=1 q=1,2");
  // normalization: order and duplicates
  CHECK(render_pair_spec(parse_pair_spec("A4 p=3,1 q=3,1,1,4")) == "A4 p=1,3 q=1,3,4");
  CHECK(parse_pair_spec("A2 p= q=1").crossed_p.empty());
  CHECK_THROWS_AS(parse_pair_spec("B3 q=1"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec("A3 r=1"), ParseError);
}
