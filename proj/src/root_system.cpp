#include "bgg/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {

Weight make_weight(std::initializer_list<long long> coords) {
  Weight w = Weight::Zero(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long long c : coords) w(i++) = Rational(c);
  return w;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w(i).to_string();
  }
  os << ")";
  return os.str();
}

int RootSystem::root_index(int lo, int hi) const {
  for (size_t r = 0; r < spans.size(); ++r) {
    if (spans[r].first == lo && spans[r].second == hi) return static_cast<int>(r);
  }
  return -1;
}

RootSystem build_root_system(int rank) {
  if (rank < 1 || rank > 7) {
    throw ParseError("unsupported rank " + std::to_string(rank) + ": expected 1..7");
  }
  RootSystem rs;
  rs.rank = rank;
  rs.cartan = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) {
    rs.cartan(i, i) = 2;
    if (i + 1 < rank) {
      rs.cartan(i, i + 1) = -1;
      rs.cartan(i + 1, i) = -1;
    }
  }
  for (int i = 0; i < rank; ++i) {
    Weight a = Weight::Zero(rank);
    for (int j = 0; j < rank; ++j) a(j) = Rational(rs.cartan(j, i));
    rs.simple_roots.push_back(a);
  }
  // positive roots alpha_lo + ... + alpha_hi, ordered by height then start node
  for (int h = 1; h <= rank; ++h) {
    for (int lo = 1; lo + h - 1 <= rank; ++lo) {
      int hi = lo + h - 1;
      Weight a = Weight::Zero(rank);
      for (int j = lo; j <= hi; ++j) a += rs.simple_roots[static_cast<size_t>(j - 1)];
      rs.positive_roots.push_back(a);
      rs.spans.emplace_back(lo, hi);
    }
  }
  rs.rho = Weight::Zero(rank);
  for (int i = 0; i < rank; ++i) rs.rho(i) = Rational(1);
  // Gram matrix = inverse Cartan: (C^{-1})_{ij} = min(i,j) - ij/(rank+1), 1-based
  rs.gram = QMat::Zero(rank, rank);
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      rs.gram(i - 1, j - 1) =
          Rational(std::min(i, j)) - Rational(static_cast<long long>(i) * j, rank + 1);
    }
  }
  return rs;
}

Rational form(const RootSystem& rs, const Weight& a, const Weight& b) {
  if (a.size() != rs.rank || b.size() != rs.rank) {
    throw ParseError("form: weight dimension mismatch");
  }
  Rational acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (b(j).is_zero()) continue;
      acc += a(i) * rs.gram(i, j) * b(j);
    }
  }
  return acc;
}

Rational pair_coroot(const RootSystem& rs, const Weight& lam, int root) {
  return form(rs, lam, rs.positive_roots[static_cast<size_t>(root)]);
}

bool is_integral(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!w(i).is_integer()) return false;
  return true;
}

bool is_dominant(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i).is_negative()) return false;
  return true;
}

bool is_dominant_at(const Weight& w, const std::vector<int>& nodes) {
  for (int n : nodes)
    if (w(n - 1).is_negative()) return false;
  return true;
}

bool is_integral_at(const Weight& w, const std::vector<int>& nodes) {
  for (int n : nodes)
    if (!w(n - 1).is_integer()) return false;
  return true;
}

bool character_is_regular(const RootSystem& rs, const Weight& lam) {
  if (lam.size() != rs.rank) throw ParseError("character_is_regular: dimension mismatch");
  Weight shifted = lam + rs.rho;
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    if (form(rs, shifted, rs.positive_roots[r]).is_zero()) return false;
  }
  return true;
}

WeylWord WeylWord::identity(int rank) {
  WeylWord w;
  w.perm.resize(static_cast<size_t>(rank) + 1);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylWord WeylWord::simple(int rank, int i) {
  WeylWord w = identity(rank);
  std::swap(w.perm[static_cast<size_t>(i - 1)], w.perm[static_cast<size_t>(i)]);
  return w;
}

WeylWord WeylWord::from_word(int rank, const std::vector<int>& word) {
  WeylWord w = identity(rank);
  for (int i : word) {
    if (i < 1 || i > rank) throw ParseError("reduced word: node out of range");
    w = w * simple(rank, i);
  }
  return w;
}

int WeylWord::length() const {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

bool WeylWord::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

// w = s_{i} w' with i the smallest left descent; left descent at i means
// pi^{-1}(i-1) > pi^{-1}(i) in 0-based positions.
std::vector<int> WeylWord::reduced_word() const {
  std::vector<int> word;
  std::vector<int> p = perm;
  auto pos_of = [&](int v) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] == v) return static_cast<int>(i);
    return -1;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i) {
      if (pos_of(i) > pos_of(i + 1)) {
        // multiply by s_{i+1} on the left: swap the values i and i+1
        int a = pos_of(i), b = pos_of(i + 1);
        std::swap(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
        word.push_back(i + 1);
        changed = true;
        break;
      }
    }
  }
  return word;
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  if (a.perm.size() != b.perm.size()) throw ParseError("WeylWord: rank mismatch");
  WeylWord r;
  r.perm.resize(a.perm.size());
  // (a*b)(e_i) = a(b(e_i))
  for (size_t i = 0; i < a.perm.size(); ++i) {
    r.perm[i] = a.perm[static_cast<size_t>(b.perm[i])];
  }
  return r;
}

namespace {

// s_i(lam) = lam - lam_i * alpha_i in fundamental coordinates.
Weight simple_reflect(const RootSystem& rs, int i, const Weight& lam) {
  return lam - lam(i - 1) * rs.simple_roots[static_cast<size_t>(i - 1)];
}

}  // namespace

Weight weyl_apply(const RootSystem& rs, const WeylWord& w, const Weight& lam) {
  if (lam.size() != rs.rank) throw ParseError("weyl_apply: dimension mismatch");
  Weight v = lam;
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    v = simple_reflect(rs, *it, v);
  }
  return v;
}

Weight affine_action(const RootSystem& rs, const WeylWord& w, const Weight& lam) {
  return affine_action_with_rho(rs, w, lam, rs.rho);
}

Weight affine_action_with_rho(const RootSystem& rs, const WeylWord& w, const Weight& lam,
                              const Weight& rho) {
  if (lam.size() != rs.rank) throw ParseError("affine_action: dimension mismatch");
  return weyl_apply(rs, w, lam + rho) - rho;
}

int inversions_on_roots(const RootSystem& rs, const WeylWord& w) {
  int count = 0;
  for (const Weight& a : rs.positive_roots) {
    Weight img = weyl_apply(rs, w, a);
    // img is again a root, so it equals +/- a positive root
    for (const Weight& b : rs.positive_roots) {
      if (img == -b) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<std::vector<WeylWord>> hasse_quotient_in(const RootSystem& rs,
                                                     const std::vector<int>& sub_nodes,
                                                     const std::vector<int>& levi_nodes) {
  for (int n : levi_nodes) {
    if (std::find(sub_nodes.begin(), sub_nodes.end(), n) == sub_nodes.end()) {
      throw ParseError("hasse_quotient_in: levi nodes must lie in the subsystem");
    }
  }
  // W_r = permutations preserving the blocks cut out by the nodes NOT in sub_nodes.
  // Generate by BFS over the generators s_i, i in sub_nodes.
  std::set<std::vector<int>> seen;
  std::vector<WeylWord> frontier{WeylWord::identity(rs.rank)};
  seen.insert(frontier[0].perm);
  std::vector<WeylWord> all = frontier;
  while (!frontier.empty()) {
    std::vector<WeylWord> next;
    for (const WeylWord& w : frontier) {
      for (int i : sub_nodes) {
        WeylWord v = w * WeylWord::simple(rs.rank, i);
        if (seen.insert(v.perm).second) {
          next.push_back(v);
          all.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  // Keep minimal coset representatives of W_l \ W_r:
  // no left descent at any levi node, i.e. pos(i-1) < pos(i) for i in levi_nodes.
  std::vector<WeylWord> reps;
  for (const WeylWord& w : all) {
    bool ok = true;
    for (int i : levi_nodes) {
      int lo = -1, hi = -1;
      for (size_t k = 0; k < w.perm.size(); ++k) {
        if (w.perm[k] == i - 1) lo = static_cast<int>(k);
        if (w.perm[k] == i) hi = static_cast<int>(k);
      }
      if (lo > hi) {
        ok = false;
        break;
      }
    }
    if (ok) reps.push_back(w);
  }
  int maxlen = 0;
  for (const WeylWord& w : reps) maxlen = std::max(maxlen, w.length());
  std::vector<std::vector<WeylWord>> graded(static_cast<size_t>(maxlen) + 1);
  for (const WeylWord& w : reps) graded[static_cast<size_t>(w.length())].push_back(w);
  for (auto& g : graded) std::sort(g.begin(), g.end());
  return graded;
}

std::vector<std::vector<WeylWord>> hasse_quotient(const RootSystem& rs,
                                                  const std::vector<int>& crossed) {
  for (int n : crossed) {
    if (n < 1 || n > rs.rank) throw ParseError("hasse_quotient: node out of range");
  }
  std::vector<int> all_nodes, levi;
  for (int i = 1; i <= rs.rank; ++i) {
    all_nodes.push_back(i);
    if (std::find(crossed.begin(), crossed.end(), i) == crossed.end()) levi.push_back(i);
  }
  return hasse_quotient_in(rs, all_nodes, levi);
}

}  // namespace bgg
