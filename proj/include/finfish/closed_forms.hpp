#ifndef FINFISH_CLOSED_FORMS_HPP
#define FINFISH_CLOSED_FORMS_HPP

#include "finfish/numeric.hpp"

namespace finfish {

// Number of fish with size n+1, i.e. n+1 free lower sides:
//   2 / ((n+1)(2n+1)) * C(3n, n).
Int fish_count(long n);

// Number of fish with left size i and right size j:
//   1/(ij) * C(2i+j-2, j-1) * C(2j+i-2, i-1).
// Computed both by the binomial form and by a factorial-ratio form; the two
// must agree.
Int fish_count_ij(long i, long j);

// Number of fish with left size i and right size j carrying one marked tail:
//   (2i+2j-3) / ((2i-1)(2j-1)) * C(2i+j-3, j-1) * C(2j+i-3, i-1).
Int marked_tail_count(long i, long j);

}  // namespace finfish

#endif  // FINFISH_CLOSED_FORMS_HPP
