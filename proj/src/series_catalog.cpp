#include "finfish/series_catalog.hpp"

#include <algorithm>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

struct Vars {
  MSeries one, t, y, a, b, u;
  explicit Vars(int n, Collapse c = {})
      : one(MSeries::constant(n, 1)),
        t(MSeries::monomial(n, 1, 1)),
        y(c.y ? one : MSeries::monomial(n, 1, 0, {1, 0, 0, 0})),
        a(c.a ? one : MSeries::monomial(n, 1, 0, {0, 1, 0, 0})),
        b(c.b ? one : MSeries::monomial(n, 1, 0, {0, 0, 1, 0})),
        u(MSeries::monomial(n, 1, 0, {0, 0, 0, 1})) {}
};

std::string describe(const MSeries::Diff& d) {
  return "t^" + std::to_string(d.t) + " y^" + std::to_string(d.e[0]) + " a^" +
         std::to_string(d.e[1]) + " b^" + std::to_string(d.e[2]) + " u^" +
         std::to_string(d.e[3]) + ": " + d.lhs.str() + " vs " + d.rhs.str();
}

void require_equal(const MSeries& lhs, const MSeries& rhs, const std::string& what) {
  if (auto d = MSeries::first_difference(lhs, rhs))
    throw ExactnessError(what + " violated at " + describe(*d));
}

}  // namespace

MSeries build_P(int order, Collapse c) {
  Vars v(order, c);
  return solve_fixed_point(
      order,
      [&](const MSeries& p) {
        MSeries lhs = v.t * v.u * (v.one + v.a * p) * (v.one + v.b * p);
        MSeries waist = v.y * v.t * v.a * v.b * v.u * p * p.sum_below_u();
        return lhs + waist;
      },
      "P(u)");
}

Parametrization build_parametrization(int order, Collapse c) {
  Vars v(order, c);
  MSeries B = solve_fixed_point(
      order,
      [&](const MSeries& x) {
        MSeries core = v.one + v.y * v.a * v.b * x * x * (v.one - v.a * v.b * x * x).inverse();
        return v.t * core * core * (v.one + v.a * x) * (v.one + v.b * x);
      },
      "B");
  MSeries den = (v.one - v.a * v.b * B * B);
  MSeries P1 =
      B - v.y * v.a * v.b * B * B * B * (v.one + v.a * B) * (v.one + v.b * B) *
              (den * den).inverse();
  return {std::move(B), std::move(P1)};
}

UVPair build_U_V(int order) {
  Vars v(order);
  Parametrization par = build_parametrization(order);
  MSeries V = v.y * v.t * v.a * v.b * par.P1.euler_t();
  MSeries U = (v.one - V).inverse();
  MSeries abB2 = v.a * v.b * par.B * par.B;
  MSeries Ualt = v.one + v.y * abB2 * (v.one - abB2).inverse();
  require_equal(U, Ualt, "U = 1 + y ab B^2/(1-ab B^2)");
  return {std::move(U), std::move(V)};
}

MarkedSeries build_marked(int order) {
  MSeries P = build_P(order);
  MSeries P1 = P.at_u1();
  MSeries less = P1.y_dy();
  MSeries greater = P1 + less;
  MSeries minus = P1.theta_t() - greater;
  UVPair uv = build_U_V(order);
  MSeries PU = P.subst_u(uv.U);
  require_equal(greater, PU, "P^> = P(U)");
  require_equal(less, PU - P1, "P^< = P(U) - P(1)");
  return {std::move(less), std::move(greater), std::move(minus)};
}

PuParametrization build_Pu_param(int order, Collapse c) {
  Vars v(order, c);
  Parametrization par = build_parametrization(order, c);
  const MSeries& B = par.B;
  MSeries inv_den = (v.one - v.a * v.b * B * B).inverse();
  MSeries ra = v.b * B * (v.one + v.a * B) * inv_den;  // bB(1+aB)/(1-abB^2)
  MSeries rb = v.a * B * (v.one + v.b * B) * inv_den;  // aB(1+bB)/(1-abB^2)
  MSeries Bu = solve_fixed_point(
      order,
      [&](const MSeries& x) {
        return v.t * v.u * (v.one + v.a * x + v.y * v.a * x * ra) *
               (v.one + v.b * x + v.y * v.b * x * rb);
      },
      "B(u)");
  MSeries abB2 = v.a * v.b * B * B;
  MSeries num = v.y * v.a * v.b * Bu * Bu * B * (v.one + v.a * B) * (v.one + v.b * B) *
                (v.one - abB2 + v.y * abB2);
  MSeries den = (v.one - abB2) * (v.one - abB2) *
                (v.one - v.a * v.b * Bu * B + v.y * v.a * v.b * Bu * B);
  MSeries Pu = Bu - num * den.inverse();
  require_equal(Pu, build_P(order, c), "P(u) parametrization = fin equation solution");
  return {std::move(Bu), std::move(Pu)};
}

RSPair build_RS(int order) {
  Vars v(order);
  Parametrization par = build_parametrization(order);
  MSeries B = par.B.specialize(true, false, false, false);
  MSeries P1 = par.P1.specialize(true, false, false, false);
  MSeries inv_den = (v.one - v.a * v.b * B * B).inverse();
  MSeries R = v.a * B * (v.one + v.b * B) * inv_den;
  MSeries S = v.b * B * (v.one + v.a * B) * inv_den;
  MSeries oR = v.one + R, oS = v.one + S;
  require_equal(R, v.t * v.a * oR * oS * oS, "R = ta(1+R)(1+S)^2");
  require_equal(S, v.t * v.b * oR * oR * oS, "S = tb(1+R)^2(1+S)");
  require_equal(B, v.t * oR * oS, "B = t(1+R)(1+S)");
  require_equal(P1, v.t * oR * oS * (v.one - R * S), "P(1) = t(1+R)(1+S)(1-RS)");
  return {std::move(R), std::move(S)};
}

const MSeries& TreeSeries::tj(int j) const {
  if (j < 0 || j > jmax) throw UsageError("T_j index out of built range");
  return Tj[static_cast<size_t>(j)];
}

const MSeries& TreeSeries::hj(int j) const {
  if (j < -2 || j > jmax) throw UsageError("H_j index out of built range");
  return Hj[static_cast<size_t>(j + 2)];
}

const MSeries& TreeSeries::tju(int j) const {
  if (j < -1 || j > jmax) throw UsageError("T_j(u) index out of built range");
  return Tju[static_cast<size_t>(j + 1)];
}

TreeSeries build_tree_series(int order, int jmax) {
  if (jmax < 0) throw UsageError("jmax must be nonnegative");
  Vars v(order);
  MSeries T = solve_fixed_point(
      order, [&](const MSeries& x) { return v.one + v.t * x * x * x; }, "T");
  MSeries B = v.t * T * T;
  MSeries X = solve_fixed_point(
      order, [&](const MSeries& x) { return B * (v.one + x + x * x); }, "X");
  MSeries Tu = solve_fixed_point(
      order, [&](const MSeries& x) { return v.one + v.t * v.u * x * x * T; }, "T(u)");
  MSeries Bu = v.t * v.u * Tu * Tu;
  TreeSeries ts{jmax,         std::move(T),  std::move(X), std::move(B),
                std::move(Tu), std::move(Bu), {},           {},
                {}};

  std::vector<MSeries> xp;  // X^0..X^{jmax+5}
  xp.push_back(v.one);
  for (int d = 1; d <= jmax + 5; ++d) xp.push_back(xp.back() * ts.X);

  for (int j = 0; j <= jmax; ++j)
    ts.Tj.push_back(ts.T * (v.one - xp[j + 5]) * (v.one - xp[j + 2]) *
                    (v.one - xp[j + 4]).inverse() * (v.one - xp[j + 3]).inverse());

  ts.Hj.push_back((ts.X - v.one) * ts.Tu);  // j = -2
  for (int j = -1; j <= jmax; ++j)
    ts.Hj.push_back((v.one - xp[j + 1]) * ts.X * ts.Tu -
                    (v.one + ts.X) * (v.one - xp[j + 2]));

  for (int j = -1; j <= jmax; ++j)
    ts.Tju.push_back(ts.Tu * ts.hj(j) * ts.hj(j - 1).inverse() * (v.one - xp[j + 2]) *
                     (v.one - xp[j + 3]).inverse());

  auto tfloor = [&](int j) -> MSeries {
    if (j == -2) return MSeries(order);
    if (j == -1) return v.one;
    return ts.tj(j);
  };
  for (int j = -1; j < jmax; ++j)
    require_equal(ts.tju(j), v.one + v.t * v.u * ts.tju(j + 1) * ts.tju(j) * tfloor(j - 1),
                  "T_j(u) recurrence at j=" + std::to_string(j));
  return ts;
}

MSeries delta(const MSeries& P) {
  MSeries d = P.delta_u();
  Vars v(P.order());
  require_equal(d * (v.u - v.one), v.u * (P - P.at_u1()), "(u-1) DeltaP = u(P(u)-P(1))");
  return d;
}

SeriesCatalog::SeriesCatalog(int order) : order_(order) {
  if (order < 1) throw UsageError("catalog order must be at least 1");
}

const MSeries& SeriesCatalog::put(const std::string& name, MSeries s) {
  return cache_.insert_or_assign(name, std::move(s)).first->second;
}

void SeriesCatalog::ensure_param() {
  if (cache_.count("B")) return;
  Parametrization par = build_parametrization(order_);
  put("B", std::move(par.B));
  put("P1", std::move(par.P1));
}

void SeriesCatalog::ensure_marked() {
  if (cache_.count("Pless")) return;
  MarkedSeries m = build_marked(order_);
  put("Pless", std::move(m.less));
  put("Pgreater", std::move(m.greater));
  put("Pminus", std::move(m.minus));
}

void SeriesCatalog::ensure_trees(int jmax) {
  if (tree_jmax_ >= jmax) return;
  TreeSeries ts = build_tree_series(order_, jmax);
  tree_jmax_ = jmax;
  put("T", std::move(ts.T));
  put("X", std::move(ts.X));
  put("Tu", std::move(ts.Tu));
  put("Btreeu", std::move(ts.Bu));
  for (int j = 0; j <= jmax; ++j) put("Tj:" + std::to_string(j), std::move(ts.Tj[j]));
  for (int j = -2; j <= jmax; ++j) put("Hj:" + std::to_string(j), std::move(ts.Hj[j + 2]));
  for (int j = -1; j <= jmax; ++j) put("Tju:" + std::to_string(j), std::move(ts.Tju[j + 1]));
}

const MSeries& SeriesCatalog::get(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;

  if (name == "P") return put("P", build_P(order_));
  if (name == "B" || name == "P1") {
    ensure_param();
    return cache_.at(name);
  }
  if (name == "U" || name == "V") {
    UVPair uv = build_U_V(order_);
    put("U", std::move(uv.U));
    put("V", std::move(uv.V));
    return cache_.at(name);
  }
  if (name == "Pless" || name == "Pgreater" || name == "Pminus") {
    ensure_marked();
    return cache_.at(name);
  }
  if (name == "Bu") {
    PuParametrization pp = build_Pu_param(order_);
    return put("Bu", std::move(pp.Bu));
  }
  if (name == "DeltaP") return put("DeltaP", delta(get("P")));
  if (name == "Rbar" || name == "Sbar") {
    RSPair rs = build_RS(order_);
    put("Rbar", std::move(rs.R));
    put("Sbar", std::move(rs.S));
    return cache_.at(name);
  }
  if (name == "T" || name == "X" || name == "Tu" || name == "Btreeu") {
    ensure_trees(std::max(tree_jmax_, 3));
    return cache_.at(name);
  }
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    if (head == "Tj" || head == "Hj" || head == "Tju") {
      int j = 0;
      try {
        size_t used = 0;
        j = std::stoi(name.substr(colon + 1), &used);
        if (colon + 1 + used != name.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError("bad index in series name: " + name);
      }
      int lo = head == "Tj" ? 0 : head == "Tju" ? -1 : -2;
      if (j < lo) throw UsageError("series " + head + " starts at j=" + std::to_string(lo));
      ensure_trees(std::max({tree_jmax_, j, 3}));
      return cache_.at(name);
    }
  }
  throw UsageError("unknown series name: " + name);
}

std::vector<std::string> SeriesCatalog::names() {
  return {"P",  "P1",     "B",    "U",      "V",       "Bu",     "Pless",
          "Pgreater", "Pminus", "DeltaP", "Rbar", "Sbar", "T", "X",
          "Tu", "Btreeu", "Tj:<j>", "Hj:<j>", "Tju:<j>"};
}

}  // namespace finfish
