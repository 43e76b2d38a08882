#include <doctest.h>

#include "finfish/closed_forms.hpp"

using namespace finfish;

TEST_CASE("fish_count sequence") {
  const long expected[] = {1, 2, 6, 22, 91, 408, 1938, 9614, 49335};
  for (long n = 1; n <= 9; ++n) CHECK(fish_count(n) == expected[n - 1]);
  CHECK_THROWS_AS(fish_count(0), UsageError);
}

TEST_CASE("fish_count_ij values and row sums") {
  CHECK(fish_count_ij(1, 1) == 1);
  CHECK(fish_count_ij(2, 2) == 4);
  CHECK(fish_count_ij(3, 2) == 10);
  CHECK(fish_count_ij(2, 3) == 10);
  for (long j = 1; j <= 6; ++j) CHECK(fish_count_ij(1, j) == 1);
  // summing over lsize+rsize = n+1 recovers the size count
  for (long n = 1; n <= 8; ++n) {
    Int sum = 0;
    for (long i = 1; i <= n; ++i) sum += fish_count_ij(i, n + 1 - i);
    CHECK(sum == fish_count(n));
  }
}

TEST_CASE("marked_tail_count values") {
  CHECK(marked_tail_count(1, 1) == 1);
  CHECK(marked_tail_count(2, 2) == 5);
  CHECK(marked_tail_count(3, 1) == 1);
  CHECK(marked_tail_count(1, 3) == 1);
  CHECK(marked_tail_count(3, 2) == marked_tail_count(2, 3));
  // size-4 fish carry 7 tails in total
  Int sum = 0;
  for (long i = 1; i <= 3; ++i) sum += marked_tail_count(i, 4 - i);
  CHECK(sum == 7);
}
