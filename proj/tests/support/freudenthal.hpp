#ifndef BGG_TESTS_FREUDENTHAL_HPP
#define BGG_TESTS_FREUDENTHAL_HPP

// Independent weight-multiplicity oracle via the Freudenthal recursion,
// used to cross-check the explicitly constructed modules.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bgg/modules.hpp"
#include "bgg/parabolic.hpp"
#include "bgg/root_system.hpp"

namespace bggtest {

/// Weight multiplicities of the irreducible with highest weight `lam` over
/// the Levi spanned by `nodes`, keyed by rendered weight.
inline std::map<std::string, long long> freudenthal_multiplicities(
    const bgg::RootSystem& rs, const std::vector<int>& nodes, const bgg::Weight& lam) {
  using namespace bgg;
  Weight rho = levi_rho(rs, nodes);
  std::vector<int> pos = roots_supported_on(rs, nodes);
  std::map<std::string, long long> mult;
  mult[weight_str(lam)] = 1;
  if (nodes.empty()) return mult;

  Rational top_norm = form(rs, lam + rho, lam + rho);
  std::vector<Weight> simple;
  for (int n : nodes) simple.push_back(rs.simple_roots[static_cast<size_t>(n - 1)]);

  for (int h = 1; h <= 400; ++h) {
    bool any = false;
    std::vector<int> comp(simple.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
      if (idx + 1 == simple.size()) {
        comp[idx] = rem;
        Weight mu = lam;
        for (size_t i = 0; i < simple.size(); ++i) mu -= Rational(comp[i]) * simple[i];
        Rational rhs(0);
        for (int r : pos) {
          const Weight& a = rs.positive_roots[static_cast<size_t>(r)];
          int ht = rs.spans[static_cast<size_t>(r)].second - rs.spans[static_cast<size_t>(r)].first + 1;
          for (int t = 1; t * ht <= h; ++t) {
            Weight up = mu + Rational(t) * a;
            auto it = mult.find(weight_str(up));
            if (it == mult.end() || it->second == 0) continue;
            rhs += Rational(2 * it->second) * form(rs, up, a);
          }
        }
        Rational denom = top_norm - form(rs, mu + rho, mu + rho);
        long long mval = 0;
        if (!denom.is_zero()) {
          Rational q = rhs / denom;
          if (q.is_integer() && !q.is_negative()) mval = q.num().to_ll();
        }
        if (mval > 0) {
          mult[weight_str(mu)] = mval;
          any = true;
        }
        return;
      }
      for (int c = 0; c <= rem; ++c) {
        comp[idx] = c;
        rec(idx + 1, rem - c);
      }
    };
    rec(0, h);
    if (!any) break;
  }
  return mult;
}

}  // namespace bggtest

#endif
