#include <doctest.h>

#include <map>

#include "finfish/ternary_trees.hpp"

using namespace finfish;

TEST_CASE("abscissas and positivity") {
  TernaryTree single = tree_node();
  CHECK(abscissas(single, 0) == std::vector<int>{0});
  TernaryTree leftChain = tree_node(tree_node());
  CHECK(abscissas(leftChain, 0) == std::vector<int>{0, 1});
  TernaryTree midRight = tree_node(nullptr, tree_node(nullptr, nullptr, tree_node()));
  CHECK(abscissas(midRight, 0) == std::vector<int>{0, 0, -1});

  CHECK(is_j_positive(nullptr, -1));
  CHECK(is_j_positive(nullptr, 3));
  CHECK(!is_j_positive(nullptr, -2));
  CHECK(is_j_positive(single, 0));
  TernaryTree rightChain = tree_node(nullptr, nullptr, tree_node());
  CHECK(!is_j_positive(rightChain, 0));
  CHECK(is_j_positive(rightChain, 1));
  TernaryTree leftRight = tree_node(tree_node(nullptr, nullptr, tree_node()));
  CHECK(is_j_positive(leftRight, 0));
  CHECK(!is_j_positive(single, -1));
}

TEST_CASE("tree text round trip") {
  for (const char* s :
       {".", "(. . .)", "((. . .) . .)", "(. (. . (. . .)) .)",
        "((. . .) (. . .) (. . .))"}) {
    TernaryTree t = parse_tree(s);
    CHECK(tree_to_string(t) == s);
  }
  CHECK_THROWS_AS(parse_tree("(. .)"), UsageError);
  CHECK_THROWS_AS(parse_tree("(. . .) ."), UsageError);
  CHECK_THROWS_AS(parse_tree("x"), UsageError);
}

TEST_CASE("tree stats basics") {
  TreeStats st = tree_stats(tree_node());
  CHECK(st.nodes == 1);
  CHECK(st.core == 1);
  CHECK(st.right_branches == 0);
  CHECK(st.even == 1);
  CHECK(st.odd == 0);
  CHECK(st.non_root_even == 0);

  // left-right chain: abscissas 0, 1, 0; right edge starts one branch
  TernaryTree lr = tree_node(tree_node(nullptr, nullptr, tree_node()));
  st = tree_stats(lr);
  CHECK(st.nodes == 3);
  CHECK(st.core == 2);
  CHECK(st.right_branches == 1);
  CHECK(st.even == 2);
  CHECK(st.odd == 1);
}

TEST_CASE("enumeration counts") {
  CHECK(trees_with_nodes(0, 1).size() == 1);
  CHECK(trees_with_nodes(1, 2).size() == 3);
  CHECK(trees_with_nodes(0, 3).size() == 6);
  // 0-positive counts by node count (same sequence as fish by size)
  const std::size_t expected[] = {1, 1, 2, 6, 22, 91, 408, 1938};
  for (int n = 0; n <= 7; ++n) CHECK(trees_with_nodes(0, n).size() == expected[n]);
  // monotone in j, and saturating at the unrestricted count
  for (int n = 1; n <= 6; ++n) {
    std::size_t prev = 0;
    for (int j = 0; j <= n; ++j) {
      std::size_t cur = trees_with_nodes(j, n).size();
      CHECK(cur >= prev);
      prev = cur;
    }
    CHECK(trees_with_nodes(n, n).size() == trees_with_nodes(n + 3, n).size());
  }
}

TEST_CASE("enumerated trees are distinct, valid and complete") {
  std::map<std::string, int> seen;
  for_each_tree(0, 5, [&](const TernaryTree& t) {
    CHECK(is_j_positive(t, 0));
    seen[tree_to_string(t)] += 1;
  });
  CHECK(seen.size() == 1 + 2 + 6 + 22 + 91);
  for (const auto& [k, v] : seen) CHECK(v == 1);
}

TEST_CASE("3-node core and right-branch multisets") {
  std::map<int, int> byCore, byRb;
  for (const auto& t : trees_with_nodes(0, 3)) {
    TreeStats st = tree_stats(t);
    byCore[st.core] += 1;
    byRb[st.right_branches] += 1;
  }
  CHECK(byCore == std::map<int, int>{{2, 1}, {3, 5}});
  CHECK(byRb == std::map<int, int>{{0, 5}, {1, 1}});
}

TEST_CASE("core equals nodes without right edges") {
  for_each_tree(0, 5, [&](const TernaryTree& t) {
    TreeStats st = tree_stats(t);
    if (st.right_branches == 0) CHECK(st.core == st.nodes);
  });
}

TEST_CASE("joint distribution matches brute force") {
  const int N = 7;
  JointTable byDP = joint_distribution_trees(N);
  JointTable byEnum;
  for_each_tree(0, N, [&](const TernaryTree& t) {
    TreeStats st = tree_stats(t);
    byEnum[{st.nodes, st.right_branches, st.non_root_even, st.odd, st.core}] += 1;
  });
  CHECK(byDP == byEnum);
}

TEST_CASE("joint distribution examples") {
  JointTable jt = joint_distribution_trees(3);
  // nodes=2 marginal over (nonRootEven, odd)
  std::map<std::pair<int, int>, Int> m2;
  std::map<int, Int> core3;
  Int t2 = 0, t3 = 0;
  for (const auto& [k, c] : jt) {
    if (k[0] == 2) {
      m2[{k[2], k[3]}] += c;
      t2 += c;
    }
    if (k[0] == 3) {
      core3[k[4]] += c;
      t3 += c;
    }
  }
  CHECK(t2 == 2);
  CHECK(t3 == 6);
  CHECK(m2 == std::map<std::pair<int, int>, Int>{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(core3 == std::map<int, Int>{{2, 1}, {3, 5}});
}

TEST_CASE("tree budget guard") {
  TreeBudget tiny;
  tiny.max_trees = 3;
  CHECK_THROWS_AS(trees_with_nodes(0, 4, tiny), BudgetError);
}
