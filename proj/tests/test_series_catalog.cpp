#include <doctest.h>

#include "finfish/errors.hpp"
#include "finfish/fish_grammar.hpp"
#include "finfish/series_catalog.hpp"

using namespace finfish;

namespace {
const VarExp E0{0, 0, 0, 0};

Rat u_coeff(const MSeries& s, int k, int m) { return s.coeff(k, {0, 0, 0, m}); }
}  // namespace

TEST_CASE("fin equation solution at small orders") {
  MSeries P = build_P(6);
  CHECK(P.coeff(0).empty());
  CHECK(u_coeff(P, 1, 1) == 1);  // single cell
  CHECK(P.coeff(1).size() == 1);
  CHECK(P.coeff(2, {0, 1, 0, 2}) == 1);
  CHECK(P.coeff(2, {0, 0, 1, 2}) == 1);
  CHECK(P.coeff(2).size() == 2);

  MSeries p111 = P.specialize(true, true, true, false);
  CHECK(u_coeff(p111, 3, 2) == 1);
  CHECK(u_coeff(p111, 3, 3) == 5);
  CHECK(p111.coeff(3).size() == 2);

  // exactly one size-4 fish has two tails
  Rat twoTails = 0;
  for (const auto& [e, c] : P.coeff(3))
    if (e[0] == 1) twoTails += c;
  CHECK(twoTails == 1);
}

TEST_CASE("series coefficients equal grammar counts") {
  int order = 6;
  MSeries P = build_P(order);
  JointTable table = joint_distribution(order + 1);
  JointTable from_series;
  for (int k = 1; k <= order; ++k)
    for (const auto& [e, c] : P.coeff(k)) {
      REQUIRE(denominator(c) == 1);
      from_series[{k + 1, e[0] + 1, e[1] + 1, e[2] + 1, e[3] + 1}] = numerator(c);
    }
  CHECK(from_series == table);
}

TEST_CASE("parametrization matches the fin equation at u=1") {
  int order = 7;
  Parametrization par = build_parametrization(order);
  MSeries p111 = par.P1.specialize(true, true, true, false);
  long fish[] = {0, 1, 2, 6, 22, 91, 408, 1938};
  for (int k = 1; k <= order; ++k) CHECK(p111.coeff(k, E0) == fish[k]);

  MSeries b111 = par.B.specialize(true, true, true, false);
  long marked[] = {0, 1, 2, 7, 30, 143, 728, 3876};
  for (int k = 1; k <= order; ++k) CHECK(b111.coeff(k, E0) == marked[k]);

  CHECK(par.P1 == build_P(order).at_u1());

  // (i,j) = (2,2): coefficient of a^1 b^1 at y=1
  MSeries py1 = par.P1.specialize(true, false, false, false);
  CHECK(py1.coeff(3, {0, 1, 1, 0}) == 4);
  MSeries by1 = par.B.specialize(true, false, false, false);
  CHECK(by1.coeff(3, {0, 1, 1, 0}) == 5);

  // the correction term of the closed form carries the tail-marking variable
  MSeries diff = par.B - par.P1;
  for (int k = 0; k <= order; ++k)
    for (const auto& [e, c] : diff.coeff(k)) CHECK(e[0] >= 1);
}

TEST_CASE("tail-marking kernel") {
  int order = 6;
  UVPair uv = build_U_V(order);
  CHECK(uv.U.coeff(0, E0) == 1);
  MSeries u111 = uv.U.specialize(true, true, true, false);
  CHECK(u111.coeff(1, E0) == 0);
  CHECK(u111.coeff(2, E0) == 1);
  CHECK(u111.coeff(3, E0) == 4);
  CHECK(u111.coeff(4, E0) == 19);

  // V = 1 - 1/U unwinds to y ab B^2 / (1 - ab B^2 + y ab B^2),
  // which collapses to B^2 once specialized
  MSeries v111 = uv.V.specialize(true, true, true, false);
  MSeries b111 = build_parametrization(order).B.specialize(true, true, true, false);
  CHECK(v111 == b111 * b111);
  MSeries one = MSeries::constant(order, 1);
  CHECK(u111 == (one - b111 * b111).inverse());
}

TEST_CASE("marked-point series") {
  int order = 6;
  MarkedSeries m = build_marked(order);
  CHECK(m.greater.coeff(1, E0) == 1);

  MSeries g111 = m.greater.specialize(true, true, true, false);
  CHECK(g111.coeff(3, E0) == 7);  // 6 fish of size 4 carry 7 tails
  MSeries l111 = m.less.specialize(true, true, true, false);
  CHECK(l111.coeff(3, E0) == 1);

  MSeries gy1 = m.greater.specialize(true, false, false, false);
  CHECK(gy1.coeff(3, {0, 1, 1, 0}) == 5);  // (i,j) = (2,2) tails total

  // flat-point count: each fish contributes size - tails
  MSeries mn111 = m.minus.specialize(true, true, true, false);
  CHECK(mn111.coeff(1, E0) == 1);       // single cell: size 2, 1 tail
  CHECK(mn111.coeff(3, E0) == 4 * 6 - 7);
}

TEST_CASE("refined parametrization reproduces the fin equation") {
  int order = 6;
  PuParametrization pp = build_Pu_param(order);  // internally checked vs build_P
  CHECK(pp.Pu.at_u1() == build_parametrization(order).P1);
  MSeries p111 = pp.Pu.specialize(true, true, true, false);
  CHECK(u_coeff(p111, 3, 2) == 1);
  CHECK(u_coeff(p111, 3, 3) == 5);
}

TEST_CASE("kernel-method auxiliary pair") {
  int order = 7;
  RSPair rs = build_RS(order);  // construction self-checks the defining system
  MSeries r11 = rs.R.specialize(false, true, true, false);
  CHECK(r11.coeff(1, E0) == 1);
  CHECK(r11.coeff(2, E0) == 3);
  CHECK(r11.coeff(3, E0) == 12);
  // swapping the roles of a and b exchanges R and S
  for (int k = 0; k <= order; ++k)
    for (const auto& [e, c] : rs.R.coeff(k))
      CHECK(rs.S.coeff(k, {e[0], e[2], e[1], e[3]}) == c);
}

TEST_CASE("tree series family") {
  int order = 8;
  TreeSeries ts = build_tree_series(order, 4);  // recurrence checked inside
  long tern[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
  for (int k = 0; k <= order; ++k) CHECK(ts.T.coeff(k, E0) == tern[k]);
  long left[] = {1, 1, 2, 6, 22, 91, 408, 1938, 9614};
  for (int k = 0; k <= order; ++k) CHECK(ts.tj(0).coeff(k, E0) == left[k]);
  CHECK(ts.tj(1).coeff(2, E0) == 3);
  CHECK(ts.X.coeff(1, E0) == 1);
  CHECK(ts.X.coeff(2, E0) == 3);
  CHECK(ts.X.coeff(3, E0) == 13);

  MSeries one = MSeries::constant(order, 1);
  CHECK(ts.tju(-1) == one);

  // section identities relating T, X and B
  CHECK(ts.T == (one - ts.B).inverse());
  CHECK(ts.T - one == ts.X * (one + ts.X * ts.X).inverse());
  CHECK(ts.B == ts.X * (one + ts.X + ts.X * ts.X).inverse());
  CHECK(ts.Bu == (ts.Tu - one) * (one - ts.B));

  // the u-refined family specializes back to the plain one
  CHECK(ts.Tu.at_u1() == ts.T);
  for (int j = 0; j <= 4; ++j) CHECK(ts.tju(j).at_u1() == ts.tj(j));
  CHECK_THROWS_AS(ts.tj(5), UsageError);
  CHECK_THROWS_AS(build_tree_series(4, -1), UsageError);
}

TEST_CASE("fin-marking operator") {
  int order = 5;
  MSeries u3 = MSeries::monomial(order, 1, 0, {0, 0, 0, 3});
  MSeries d = delta(u3);
  for (int m = 1; m <= 3; ++m) CHECK(d.coeff(0, {0, 0, 0, m}) == 1);

  MSeries dp = delta(build_P(order)).specialize(true, true, true, false);
  CHECK(u_coeff(dp, 3, 1) == 6);
  CHECK(u_coeff(dp, 3, 2) == 6);
  CHECK(u_coeff(dp, 3, 3) == 5);
}

TEST_CASE("named catalog access") {
  SeriesCatalog cat(5);
  CHECK(cat.order() == 5);
  const MSeries& p1 = cat.get("P1");
  CHECK(&cat.get("P1") == &p1);  // cached
  CHECK(p1.specialize(true, true, true, false).coeff(4, E0) == 22);
  CHECK(cat.get("U").coeff(0, E0) == 1);
  CHECK(cat.get("Tju:-1") == MSeries::constant(5, 1));
  CHECK(cat.get("Tj:4").coeff(0, E0) == 1);
  CHECK(cat.get("Hj:-2").coeff(0, E0) == -1);
  CHECK(cat.get("DeltaP").coeff(1, {0, 0, 0, 1}) == 1);
  CHECK_THROWS_AS(cat.get("nope"), UsageError);
  CHECK_THROWS_AS(cat.get("Tj:-1"), UsageError);
  CHECK_THROWS_AS(cat.get("Tj:x"), UsageError);
  CHECK_THROWS_AS(SeriesCatalog(0), UsageError);
  CHECK(!SeriesCatalog::names().empty());
}
