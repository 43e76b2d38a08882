#include "finfish/power_series.hpp"

#include <algorithm>
#include <set>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

void poly_add_term(Poly& p, const VarExp& e, const Rat& c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.erase(it);
}

void poly_add(Poly& p, const Poly& q, bool negate = false) {
  for (const auto& [e, c] : q) poly_add_term(p, e, negate ? Rat(-c) : c);
}

void check_same_order(const MSeries& x, const MSeries& y) {
  if (x.order() != y.order())
    throw StructureError("series truncation orders differ: " + std::to_string(x.order()) +
                         " vs " + std::to_string(y.order()));
}

}  // namespace

MSeries::MSeries(int order) : order_(order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  c_.resize(static_cast<size_t>(order) + 1);
}

MSeries MSeries::constant(int order, const Rat& c) {
  return monomial(order, c, 0);
}

MSeries MSeries::monomial(int order, const Rat& c, int dt, VarExp e) {
  MSeries s(order);
  if (dt < 0 || e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0)
    throw UsageError("monomial exponents must be nonnegative");
  if (dt <= order && c != 0) s.c_[dt].emplace(e, c);
  return s;
}

const Poly& MSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw UsageError("coefficient index out of range");
  return c_[k];
}

Rat MSeries::coeff(int k, VarExp e) const {
  const Poly& p = coeff(k);
  auto it = p.find(e);
  return it == p.end() ? Rat(0) : it->second;
}

bool MSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.empty(); });
}

MSeries& MSeries::operator+=(const MSeries& o) {
  check_same_order(*this, o);
  for (int k = 0; k <= order_; ++k) poly_add(c_[k], o.c_[k]);
  return *this;
}

MSeries& MSeries::operator-=(const MSeries& o) {
  check_same_order(*this, o);
  for (int k = 0; k <= order_; ++k) poly_add(c_[k], o.c_[k], true);
  return *this;
}

MSeries operator*(const MSeries& x, const MSeries& y) {
  check_same_order(x, y);
  MSeries r(x.order_);
  for (int i = 0; i <= x.order_; ++i) {
    if (x.c_[i].empty()) continue;
    for (int j = 0; i + j <= x.order_; ++j) {
      if (y.c_[j].empty()) continue;
      Poly& out = r.c_[i + j];
      for (const auto& [ex, cx] : x.c_[i])
        for (const auto& [ey, cy] : y.c_[j]) {
          VarExp e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2], ex[3] + ey[3]};
          poly_add_term(out, e, cx * cy);
        }
    }
  }
  return r;
}

MSeries MSeries::operator-() const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k]) r.c_[k].emplace(e, -c);
  return r;
}

MSeries& MSeries::mul_scalar(const Rat& c) {
  if (c == 0) {
    for (Poly& p : c_) p.clear();
    return *this;
  }
  for (Poly& p : c_)
    for (auto& [e, v] : p) v *= c;
  return *this;
}

MSeries MSeries::pow(int e) const {
  if (e < 0) throw UsageError("negative series power");
  MSeries r = constant(order_, 1);
  MSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

MSeries MSeries::inverse() const {
  auto it = c_[0].find(VarExp{0, 0, 0, 0});
  if (c_[0].size() != 1 || it == c_[0].end())
    throw StructureError("series inverse requires a rational constant term");
  // Newton-free back substitution: r_k = (delta_{k,0} - sum_{i<k} r_i s_{k-i}) / s_0.
  Rat inv0 = 1 / it->second;
  MSeries r(order_);
  r.c_[0].emplace(VarExp{0, 0, 0, 0}, inv0);
  for (int k = 1; k <= order_; ++k) {
    Poly acc;
    for (int i = 0; i < k; ++i) {
      if (r.c_[i].empty() || c_[k - i].empty()) continue;
      for (const auto& [er, cr] : r.c_[i])
        for (const auto& [es, cs] : c_[k - i]) {
          VarExp e{er[0] + es[0], er[1] + es[1], er[2] + es[2], er[3] + es[3]};
          poly_add_term(acc, e, cr * cs);
        }
    }
    for (auto& [e, c] : acc) c *= -inv0;
    r.c_[k] = std::move(acc);
  }
  return r;
}

MSeries MSeries::specialize(bool set_y, bool set_a, bool set_b, bool set_u) const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k]) {
      VarExp f = e;
      if (set_y) f[0] = 0;
      if (set_a) f[1] = 0;
      if (set_b) f[2] = 0;
      if (set_u) f[3] = 0;
      poly_add_term(r.c_[k], f, c);
    }
  return r;
}

MSeries MSeries::subst_u(const MSeries& U) const {
  check_same_order(*this, U);
  if (U.involves_u()) throw StructureError("substitution series must be u-free");
  std::vector<MSeries> upow;
  upow.push_back(constant(order_, 1));
  int maxdeg = max_u_degree();
  for (int d = 1; d <= maxdeg; ++d) upow.push_back(upow.back() * U);
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k]) {
      const MSeries& up = upow[static_cast<size_t>(e[3])];
      VarExp base{e[0], e[1], e[2], 0};
      // multiply the u-free part of the monomial into U^{e_u}, shifted by t^k
      for (int j = 0; k + j <= order_; ++j)
        for (const auto& [eu, cu] : up.c_[j]) {
          VarExp f{base[0] + eu[0], base[1] + eu[1], base[2] + eu[2], 0};
          poly_add_term(r.c_[k + j], f, c * cu);
        }
    }
  return r;
}

MSeries MSeries::y_dy() const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k])
      if (e[0] != 0) r.c_[k].emplace(e, c * e[0]);
  return r;
}

MSeries MSeries::euler_t() const {
  MSeries r(order_);
  for (int k = 1; k <= order_; ++k)
    for (const auto& [e, c] : c_[k]) r.c_[k].emplace(e, c * k);
  return r;
}

MSeries MSeries::theta_t() const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k]) r.c_[k].emplace(e, c * (k + 1));
  return r;
}

MSeries MSeries::delta_u() const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k])
      for (int m = 1; m <= e[3]; ++m) poly_add_term(r.c_[k], VarExp{e[0], e[1], e[2], m}, c);
  return r;
}

MSeries MSeries::sum_below_u() const {
  MSeries r(order_);
  for (int k = 0; k <= order_; ++k)
    for (const auto& [e, c] : c_[k])
      for (int m = 0; m < e[3]; ++m) poly_add_term(r.c_[k], VarExp{e[0], e[1], e[2], m}, c);
  return r;
}

int MSeries::max_u_degree() const {
  int d = 0;
  for (const Poly& p : c_)
    for (const auto& [e, c] : p) d = std::max(d, e[3]);
  return d;
}

bool operator==(const MSeries& x, const MSeries& y) {
  check_same_order(x, y);
  return x.c_ == y.c_;
}

std::optional<MSeries::Diff> MSeries::first_difference(const MSeries& x, const MSeries& y) {
  check_same_order(x, y);
  for (int k = 0; k <= x.order_; ++k) {
    if (x.c_[k] == y.c_[k]) continue;
    std::set<VarExp> exps;
    for (const auto& [e, c] : x.c_[k]) exps.insert(e);
    for (const auto& [e, c] : y.c_[k]) exps.insert(e);
    for (const VarExp& e : exps) {
      Rat l = x.coeff(k, e), r = y.coeff(k, e);
      if (l != r) return Diff{k, e, l, r};
    }
  }
  return std::nullopt;
}

MSeries solve_fixed_point(int order, const std::function<MSeries(const MSeries&)>& F,
                          const std::string& what) {
  MSeries x(order);
  for (int iter = 0; iter <= order + 1; ++iter) {
    MSeries next = F(x);
    if (next.order() != order)
      throw StructureError("fixed-point map changed truncation order");
    // Orders below the iteration count must already be settled.
    for (int k = 0; k < std::min(iter, order + 1); ++k)
      if (next.coeff(k) != x.coeff(k))
        throw DivergenceError(what + ": coefficient of t^" + std::to_string(k) +
                              " changed after it should have stabilized");
    if (next == x) return x;
    x = std::move(next);
  }
  throw DivergenceError(what + ": iteration did not stabilize within order+1 steps");
}

}  // namespace finfish
