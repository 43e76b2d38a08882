#ifndef FINFISH_NUMERIC_HPP
#define FINFISH_NUMERIC_HPP

#include <array>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "finfish/errors.hpp"

namespace finfish {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Five-statistic counting tables, used for fish over
// (size, tails, rsize, lsize, fin) and for trees over
// (nodes, rightBranches, nonRootEven, oddNodes, coreSize).
using StatKey = std::array<int, 5>;
using JointTable = std::map<StatKey, Int>;

// num / den, throwing ExactnessError on a nonzero remainder.
Int exact_div(const Int& num, const Int& den);

Int factorial(long n);

// Binomial coefficient; zero outside 0 <= k <= n.
Int binomial(long n, long k);

}  // namespace finfish

#endif  // FINFISH_NUMERIC_HPP
