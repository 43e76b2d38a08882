#include "finfish/closed_forms.hpp"

namespace finfish {

Int fish_count(long n) {
  if (n < 1) throw UsageError("fish_count: n must be >= 1");
  return exact_div(2 * binomial(3 * n, n), Int(n + 1) * (2 * n + 1));
}

Int fish_count_ij(long i, long j) {
  if (i < 1 || j < 1) throw UsageError("fish_count_ij: i, j must be >= 1");
  Int byBinomials =
      exact_div(binomial(2 * i + j - 2, j - 1) * binomial(2 * j + i - 2, i - 1),
                Int(i) * j);
  // Same value written with factorials:
  //   (2i+j-2)! (2j+i-2)! / ( i! j! (2i-1)! (2j-1)! ).
  Int byFactorials =
      exact_div(factorial(2 * i + j - 2) * factorial(2 * j + i - 2),
                factorial(i) * factorial(j) * factorial(2 * i - 1) *
                    factorial(2 * j - 1));
  if (byBinomials != byFactorials)
    throw ExactnessError("fish_count_ij: binomial and factorial forms disagree");
  return byBinomials;
}

Int marked_tail_count(long i, long j) {
  if (i < 1 || j < 1) throw UsageError("marked_tail_count: i, j must be >= 1");
  return exact_div(Int(2 * i + 2 * j - 3) * binomial(2 * i + j - 3, j - 1) *
                       binomial(2 * j + i - 3, i - 1),
                   Int(2 * i - 1) * (2 * j - 1));
}

}  // namespace finfish
