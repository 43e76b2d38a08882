#ifndef FINFISH_SERIES_CATALOG_HPP
#define FINFISH_SERIES_CATALOG_HPP

#include <string>
#include <vector>

#include "finfish/power_series.hpp"

namespace finfish {

// Solve with the chosen variables preset to 1; the unique solutions of the
// specialized equations equal the specializations of the full solutions, but
// cost far less at high order.
struct Collapse {
  bool y = false, a = false, b = false;
};

// Master fin equation in all five variables: the coefficient of
// t^{s-1} y^{h-1} a^{r-1} b^{l-1} u^{f-1} counts fish with size s, h tails,
// rsize r, lsize l, fin length f.
MSeries build_P(int order, Collapse c = {});

struct Parametrization {
  MSeries B;   // unique solution of its defining fixed-point equation
  MSeries P1;  // closed form in B; equals build_P at u=1
};
Parametrization build_parametrization(int order, Collapse c = {});

struct UVPair {
  MSeries U, V;  // V = ytab * (t d/dt) P(1); U = 1/(1-V)
};
// Cross-checks U against 1 + y ab B^2/(1 - ab B^2); throws ExactnessError
// on mismatch.
UVPair build_U_V(int order);

struct MarkedSeries {
  MSeries less;     // marked branch point: y d/dy P(1)
  MSeries greater;  // marked tail: P(1) + y d/dy P(1)
  MSeries minus;    // marked lower flat point: (t d/dt)(t P(1)) - greater
};
// Cross-checks greater == P(U) and less == P(U) - P(1).
MarkedSeries build_marked(int order);

struct PuParametrization {
  MSeries Bu;  // B(u): fixed-point refinement of B
  MSeries Pu;  // closed form; cross-checked against build_P
};
PuParametrization build_Pu_param(int order, Collapse c = {});

struct RSPair {
  MSeries R, S;  // at y=1: R = aB(1+bB)/(1-abB^2), S = bB(1+aB)/(1-abB^2)
};
// Verifies the system R = ta(1+R)(1+S)^2, S = tb(1+R)^2(1+S) and the
// product forms B = t(1+R)(1+S), P(1) = t(1+R)(1+S)(1-RS) at y=1.
RSPair build_RS(int order);

// Everything below is specialized at y=a=b=1; only t and u appear.
struct TreeSeries {
  int jmax = 0;
  MSeries T;       // T = 1 + t T^3
  MSeries X;       // X = B(1+X+X^2)
  MSeries B;       // t T^2
  MSeries Tu;      // T(u) = 1 + tu T(u)^2 T
  MSeries Bu;      // tu T(u)^2
  std::vector<MSeries> Tj;   // [j] for j = 0..jmax
  std::vector<MSeries> Hj;   // [j+2] for j = -2..jmax
  std::vector<MSeries> Tju;  // [j+1] for j = -1..jmax
  const MSeries& tj(int j) const;
  const MSeries& hj(int j) const;
  const MSeries& tju(int j) const;
};
// Builds the closed forms and verifies the recurrence
// T_j(u) = 1 + tu T_{j+1}(u) T_j(u) T_{j-1} for -1 <= j < jmax.
TreeSeries build_tree_series(int order, int jmax);

// u^k -> u + ... + u^k per monomial; verified against u(P(u)-P(1))/(u-1).
MSeries delta(const MSeries& P);

// Named access to every series above, with lazy caching. Names:
//   P, P1, B, U, V, Bu, Pless, Pgreater, Pminus, DeltaP, Rbar, Sbar,
//   T, X, Tu, Btreeu, Tj:<j>, Hj:<j>, Tju:<j>
class SeriesCatalog {
 public:
  explicit SeriesCatalog(int order);
  int order() const { return order_; }
  const MSeries& get(const std::string& name);
  static std::vector<std::string> names();

 private:
  const MSeries& put(const std::string& name, MSeries s);
  void ensure_param();
  void ensure_marked();
  void ensure_trees(int jmax);
  int order_;
  int tree_jmax_ = -1;
  std::map<std::string, MSeries> cache_;
};

}  // namespace finfish

#endif  // FINFISH_SERIES_CATALOG_HPP
