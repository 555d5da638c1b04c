#pragma once
// Root systems of the compact simple Lie types.
//
// Roots are stored as integer coordinate vectors over a fixed basis of simple
// roots.  The positive roots are enumerated by closing the simple basis under
// root strings (walk down to find p, then q = p - <beta, alpha_j^vee> tells
// whether beta + alpha_j is a root).  Euclidean normalization: long roots have
// squared length 2; short roots have squared length 1 (B, C, F4) or 2/3 (G2).
//
// Simple-root numbering (fixed so that the Dynkin marks of the maximal root
// come out as):
//   F4: (2,3,4,2)   E6: (1,2,3,2,1,2)   E7: (1,2,3,4,3,2,2)
//   E8: (2,3,4,5,6,4,2,3)               G2: (2,3)
// Concretely: A/B/C are plain chains; D has node l attached to node l-2;
// E6 is the chain a1..a5 with a6 on a3; E7 is the chain a1..a6 with a7 on a4;
// E8 is the chain a1..a7 with a8 on a5.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace einmetric {

enum class Series : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

struct CartanType {
  Series series;
  int rank;

  std::string name() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
  }

  static CartanType parse(const std::string& s) {
    require(s.size() >= 2, "bad type name: " + s);
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    require(c >= 'A' && c <= 'G', "bad series letter: " + s);
    int r = std::stoi(s.substr(1));
    CartanType t{static_cast<Series>(c), r};
    t.validate();
    return t;
  }

  void validate() const {
    switch (series) {
      case Series::A: require(rank >= 1, "A_l needs l >= 1"); break;
      case Series::B: require(rank >= 2, "B_l needs l >= 2"); break;
      case Series::C: require(rank >= 2, "C_l needs l >= 2"); break;
      case Series::D: require(rank >= 3, "D_l needs l >= 3"); break;
      case Series::E: require(rank >= 6 && rank <= 8, "E_l needs 6 <= l <= 8"); break;
      case Series::F: require(rank == 4, "F_l needs l = 4"); break;
      case Series::G: require(rank == 2, "G_l needs l = 2"); break;
    }
  }
};

// Coordinates of a root in the simple basis (1-based node labels map to
// indices 0..rank-1).
using Coeffs = std::vector<int>;

inline int height_of(const Coeffs& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

struct RootSystem {
  CartanType type;
  int rank = 0;
  // cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j); always an integer.
  std::vector<std::vector<int>> cartan;
  // (a_i, a_i) in the normalization above.
  std::vector<Rat> norm2;
  // Positive roots sorted by (height, lex).  Simple roots come first.
  std::vector<Coeffs> positive;
  std::map<Coeffs, int> index_of;
  Coeffs max_root;

  int n_positive() const { return static_cast<int>(positive.size()); }
  int dimension() const { return 2 * n_positive() + rank; }  // dim of the Lie algebra

  // Dynkin marks: coefficients of the maximal root.
  const Coeffs& marks() const { return max_root; }

  bool is_positive_root(const Coeffs& c) const { return index_of.count(c) != 0; }

  bool is_root(const Coeffs& c) const {
    if (index_of.count(c)) return true;
    Coeffs n(c);
    for (int& x : n) x = -x;
    return index_of.count(n) != 0;
  }

  std::optional<int> pos_index(const Coeffs& c) const {
    auto it = index_of.find(c);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
  }

  // <b, a_j^vee> = 2 (b, a_j) / (a_j, a_j) = sum_i b_i cartan[i][j].
  int pairing(const Coeffs& b, int j) const {
    int s = 0;
    for (int i = 0; i < rank; ++i) s += b[i] * cartan[i][j];
    return s;
  }

  Rat inner(const Coeffs& a, const Coeffs& b) const {
    // (a_i, a_j) = cartan[i][j] * (a_j, a_j) / 2
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank; ++j) {
        if (b[j] == 0) continue;
        s += Rat(a[i] * b[j]) * Rat(cartan[i][j]) * norm2[j] / 2;
      }
    }
    return s;
  }

  Rat norm2_of(const Coeffs& a) const { return inner(a, a); }

  // p of the a-string through b: largest k >= 0 with b - k a a root.
  // (b and a roots, b != +-a.)
  int string_down(const Coeffs& b, const Coeffs& a) const {
    int p = 0;
    Coeffs c(b);
    for (;;) {
      for (int i = 0; i < rank; ++i) c[i] -= a[i];
      if (!is_root(c)) break;
      ++p;
    }
    return p;
  }

  // Nodes adjacent to node i in the Dynkin diagram.
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < rank; ++j)
      if (j != i && cartan[i][j] != 0) out.push_back(j);
    return out;
  }
};

namespace detail {

inline void chain_edges(std::vector<std::pair<int, int>>& e, int from, int to) {
  for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
}

}  // namespace detail

inline RootSystem build_root_system(CartanType type) {
  type.validate();
  RootSystem rs;
  rs.type = type;
  const int l = rs.rank = type.rank;

  // Norms of the simple roots and diagram edges.
  rs.norm2.assign(l, Rat(2));
  std::vector<std::pair<int, int>> edges;  // 0-based
  switch (type.series) {
    case Series::A:
      detail::chain_edges(edges, 0, l - 1);
      break;
    case Series::B:
      detail::chain_edges(edges, 0, l - 1);
      rs.norm2[l - 1] = 1;
      break;
    case Series::C:
      detail::chain_edges(edges, 0, l - 1);
      for (int i = 0; i < l - 1; ++i) rs.norm2[i] = 1;
      break;
    case Series::D:
      detail::chain_edges(edges, 0, l - 2);
      edges.emplace_back(l - 3, l - 1);
      break;
    case Series::E:
      if (l == 6) {
        detail::chain_edges(edges, 0, 4);
        edges.emplace_back(2, 5);
      } else if (l == 7) {
        detail::chain_edges(edges, 0, 5);
        edges.emplace_back(3, 6);
      } else {  // E8: chain a1..a7, plus a8 on a5
        detail::chain_edges(edges, 0, 6);
        edges.emplace_back(4, 7);
      }
      break;
    case Series::F:
      detail::chain_edges(edges, 0, 3);
      rs.norm2[2] = rs.norm2[3] = 1;
      break;
    case Series::G:
      edges.emplace_back(0, 1);
      rs.norm2[1] = Rat(2, 3);
      break;
  }

  // Adjacent simple roots have (a_i, a_j) = -max(norm2)/2... more precisely,
  // for the single/double/triple bonds occurring above the inner product of an
  // adjacent pair is -1 except the short-short F4 pair (a3, a4) and the G2
  // pair, where it is -1/2 and -1 respectively.  All cases are captured by
  // (a_i, a_j) = -norm2_long/2 with norm2_long the larger of the two norms.
  std::vector<std::vector<Rat>> gram(l, std::vector<Rat>(l, Rat(0)));
  for (int i = 0; i < l; ++i) gram[i][i] = rs.norm2[i];
  for (auto [i, j] : edges) {
    Rat g = -std::max(rs.norm2[i], rs.norm2[j]) / 2;
    gram[i][j] = gram[j][i] = g;
  }
  rs.cartan.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat a = 2 * gram[i][j] / rs.norm2[j];
      rs.cartan[i][j] = static_cast<int>(to_int(a).get_si());
    }

  // Enumerate positive roots, height by height.
  std::vector<Coeffs> frontier;
  for (int i = 0; i < l; ++i) {
    Coeffs c(l, 0);
    c[i] = 1;
    frontier.push_back(c);
    rs.index_of[c] = 0;  // placeholder; reindexed below
  }
  std::vector<Coeffs> all(frontier);
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& b : frontier) {
      for (int j = 0; j < l; ++j) {
        // q = p - <b, a_j^vee>; b + a_j is a root iff q > 0.
        Coeffs down(b);
        int p = 0;
        for (;;) {
          down[j] -= 1;
          if (!rs.index_of.count(down)) break;
          ++p;
        }
        int q = p - rs.pairing(b, j);
        if (q <= 0) continue;
        Coeffs up(b);
        up[j] += 1;
        if (rs.index_of.count(up)) continue;
        rs.index_of[up] = 0;
        next.push_back(up);
        all.push_back(up);
      }
    }
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Coeffs& a, const Coeffs& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.positive = std::move(all);
  rs.index_of.clear();
  for (int i = 0; i < rs.n_positive(); ++i) rs.index_of[rs.positive[i]] = i;
  rs.max_root = rs.positive.back();

  // The maximal root must dominate every positive root coefficient-wise.
  for (const Coeffs& c : rs.positive)
    for (int i = 0; i < l; ++i)
      require(c[i] <= rs.max_root[i], "maximal root is not dominant");

  return rs;
}

}  // namespace einmetric
