#include "finfish/ternary_trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace finfish {

TernaryTree tree_node(TernaryTree left, TernaryTree middle, TernaryTree right) {
  auto n = std::make_shared<TreeNode>();
  n->left = std::move(left);
  n->middle = std::move(middle);
  n->right = std::move(right);
  return n;
}

int node_count(const TernaryTree& t) {
  if (!t) return 0;
  return 1 + node_count(t->left) + node_count(t->middle) + node_count(t->right);
}

namespace {

void collect_abscissas(const TernaryTree& t, int x, std::vector<int>& out) {
  if (!t) return;
  out.push_back(x);
  collect_abscissas(t->left, x + 1, out);
  collect_abscissas(t->middle, x, out);
  collect_abscissas(t->right, x - 1, out);
}

int min_abscissa(const TernaryTree& t, int x) {
  int m = x;
  if (t->left) m = std::min(m, min_abscissa(t->left, x + 1));
  if (t->middle) m = std::min(m, min_abscissa(t->middle, x));
  if (t->right) m = std::min(m, min_abscissa(t->right, x - 1));
  return m;
}

}  // namespace

std::vector<int> abscissas(const TernaryTree& t, int root_x) {
  std::vector<int> out;
  collect_abscissas(t, root_x, out);
  return out;
}

bool is_j_positive(const TernaryTree& t, int j) {
  if (!t) return j >= -1;
  if (j < 0) return false;
  return min_abscissa(t, j) >= 0;
}

namespace {

void walk_stats(const TernaryTree& t, int x, bool in_core, bool via_right,
                TreeStats& st) {
  if (!t) return;
  ++st.nodes;
  (((x % 2) + 2) % 2 == 0 ? st.even : st.odd) += 1;
  if (in_core) ++st.core;
  if (t->right && !via_right) ++st.right_branches;
  walk_stats(t->left, x + 1, in_core, false, st);
  walk_stats(t->middle, x, in_core, false, st);
  walk_stats(t->right, x - 1, false, true, st);
}

}  // namespace

TreeStats tree_stats(const TernaryTree& t, int root_x) {
  if (!t) throw StructureError("tree_stats on the empty tree");
  TreeStats st;
  walk_stats(t, root_x, true, false, st);
  st.non_root_even = st.even - 1;
  return st;
}

std::string tree_to_string(const TernaryTree& t) {
  if (!t) return ".";
  return "(" + tree_to_string(t->left) + " " + tree_to_string(t->middle) + " " +
         tree_to_string(t->right) + ")";
}

namespace {

struct TreeParser {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  TernaryTree tree() {
    skip_ws();
    if (i >= s.size()) throw UsageError("tree parse: unexpected end");
    if (s[i] == '.') {
      ++i;
      return nullptr;
    }
    if (s[i] != '(') throw UsageError("tree parse: expected '(' or '.'");
    ++i;
    TernaryTree l = tree();
    TernaryTree m = tree();
    TernaryTree r = tree();
    skip_ws();
    if (i >= s.size() || s[i] != ')') throw UsageError("tree parse: expected ')'");
    ++i;
    return tree_node(l, m, r);
  }
};

}  // namespace

TernaryTree parse_tree(std::string_view text) {
  TreeParser p{text};
  TernaryTree t = p.tree();
  p.skip_ws();
  if (p.i != text.size()) throw UsageError("tree parse: trailing input");
  return t;
}

namespace {

struct TreeGen {
  long long produced = 0;
  long long limit = 0;
  // key: (min(j, nodes), nodes)
  std::map<std::pair<int, int>, std::vector<TernaryTree>> memo;

  const std::vector<TernaryTree>& gen(int j, int n) {
    auto key = std::make_pair(std::min(j, n), n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<TernaryTree> out;
    if (n == 0) {
      out.push_back(nullptr);
    } else {
      for (int n1 = 0; n1 <= n - 1; ++n1)
        for (int n2 = 0; n2 + n1 <= n - 1; ++n2) {
          int n3 = n - 1 - n1 - n2;
          if (j == 0 && n3 > 0) continue;  // right child would drop below 0
          const auto& ls = gen(j + 1, n1);
          const auto& ms = gen(j, n2);
          const auto& rs = gen(j - 1, n3);
          for (const auto& l : ls)
            for (const auto& m : ms)
              for (const auto& r : rs) {
                if (++produced > limit)
                  throw BudgetError("tree enumeration exceeded its budget");
                out.push_back(tree_node(l, m, r));
              }
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<TernaryTree> trees_with_nodes(int j, int nodes, const TreeBudget& budget) {
  if (j < 0 || nodes < 0) throw UsageError("trees_with_nodes: j, nodes must be >= 0");
  TreeGen g;
  g.limit = budget.max_trees;
  return g.gen(j, nodes);
}

void for_each_tree(int j, int max_nodes,
                   const std::function<void(const TernaryTree&)>& fn,
                   const TreeBudget& budget) {
  if (j < 0 || max_nodes < 1)
    throw UsageError("for_each_tree: need j >= 0 and max_nodes >= 1");
  TreeGen g;
  g.limit = budget.max_trees;
  for (int n = 1; n <= max_nodes; ++n)
    for (const auto& t : g.gen(j, n)) fn(t);
}

JointTable joint_distribution_trees(int max_nodes) {
  if (max_nodes < 1) throw UsageError("joint_distribution_trees: max_nodes >= 1");
  const int N = max_nodes;
  // abscissa states: 0..N-1 exact; N/N+1 unconstrained of even/odd parity
  const int S = N + 2;
  auto canon = [&](int j) { return j < N ? j : N + (j & 1); };
  auto parity = [&](int s) { return s < N ? (s & 1) : (s - N); };
  auto canon_left = [&](int s) { return s < N ? canon(s + 1) : N + ((s - N) ^ 1); };
  auto canon_right = [&](int s) {
    // callers guard s == 0
    return s < N ? s - 1 : N + ((s - N) ^ 1);
  };

  using Key4 = std::array<int, 4>;  // (rb, even, odd, core)
  using Layer = std::map<Key4, Int>;
  // T[s][c][v][n]
  std::vector<std::array<std::array<std::vector<Layer>, 2>, 2>> T(
      S, {{{std::vector<Layer>(N + 1), std::vector<Layer>(N + 1)},
           {std::vector<Layer>(N + 1), std::vector<Layer>(N + 1)}}});
  for (int s = 0; s < S; ++s)
    for (int c = 0; c < 2; ++c)
      for (int v = 0; v < 2; ++v) T[s][c][v][0][{0, 0, 0, 0}] = 1;

  for (int n = 1; n <= N; ++n)
    for (int s = 0; s < S; ++s)
      for (int c = 0; c < 2; ++c)
        for (int v = 0; v < 2; ++v) {
          const int p = parity(s);
          Layer& out = T[s][c][v][n];
          for (int n1 = 0; n1 <= n - 1; ++n1)
            for (int n2 = 0; n1 + n2 <= n - 1; ++n2) {
              const int n3 = n - 1 - n1 - n2;
              if (s == 0 && n3 > 0) continue;
              const Layer& L = T[canon_left(s)][c][0][n1];
              const Layer& M = T[s][c][0][n2];
              static const Layer emptyOnly = {{{0, 0, 0, 0}, Int(1)}};
              const Layer& R = (n3 == 0 && s == 0)
                                   ? emptyOnly
                                   : T[canon_right(s)][0][1][n3];
              for (const auto& [kl, cl] : L)
                for (const auto& [km, cm] : M) {
                  Int lm = cl * cm;
                  for (const auto& [kr, cr] : R) {
                    Key4 k{kl[0] + km[0] + kr[0] + ((n3 > 0 && !v) ? 1 : 0),
                           kl[1] + km[1] + kr[1] + (p == 0 ? 1 : 0),
                           kl[2] + km[2] + kr[2] + (p == 1 ? 1 : 0),
                           kl[3] + km[3] + kr[3] + c};
                    out[k] += lm * cr;
                  }
                }
            }
        }

  JointTable out;
  for (int n = 1; n <= N; ++n)
    for (const auto& [k, cnt] : T[canon(0)][1][0][n])
      out[{n, k[0], k[1] - 1, k[2], k[3]}] += cnt;
  return out;
}

}  // namespace finfish
