#ifndef FINFISH_TERNARY_TREES_HPP
#define FINFISH_TERNARY_TREES_HPP

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finfish/numeric.hpp"

namespace finfish {

struct TreeNode;
using TernaryTree = std::shared_ptr<const TreeNode>;  // empty tree = nullptr

struct TreeNode {
  TernaryTree left, middle, right;
};

TernaryTree tree_node(TernaryTree left = {}, TernaryTree middle = {},
                      TernaryTree right = {});

int node_count(const TernaryTree& t);

// Preorder (root, left, middle, right) abscissas: left child x+1, middle
// child x, right child x-1.
std::vector<int> abscissas(const TernaryTree& t, int root_x);

// All abscissas >= 0 when the root sits at j. The empty tree is j-positive
// for every j >= -1 and not below.
bool is_j_positive(const TernaryTree& t, int j);

struct TreeStats {
  int nodes = 0;
  int core = 0;            // nodes reachable from the root by left/middle edges
  int right_branches = 0;  // maximal chains of right edges
  int even = 0, odd = 0;   // by abscissa parity, root at 0
  int non_root_even = 0;   // even - 1
};

TreeStats tree_stats(const TernaryTree& t, int root_x = 0);  // nonempty

// Text form: "." for empty, "(L M R)" otherwise.
std::string tree_to_string(const TernaryTree& t);
TernaryTree parse_tree(std::string_view text);

struct TreeBudget {
  long long max_trees = 10'000'000;
};

// All j-positive trees with exactly `nodes` nodes.
std::vector<TernaryTree> trees_with_nodes(int j, int nodes,
                                          const TreeBudget& budget = {});

// Every nonempty j-positive tree with at most max_nodes nodes, exactly once,
// ascending by node count.
void for_each_tree(int j, int max_nodes,
                   const std::function<void(const TernaryTree&)>& fn,
                   const TreeBudget& budget = {});

// Exact joint counts over (nodes, rightBranches, nonRootEven, oddNodes,
// coreSize) for 0-positive trees with 1 <= nodes <= max_nodes, via an
// abscissa-bounded dynamic program.
JointTable joint_distribution_trees(int max_nodes);

}  // namespace finfish

#endif  // FINFISH_TERNARY_TREES_HPP
