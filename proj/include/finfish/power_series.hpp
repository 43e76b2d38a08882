#ifndef FINFISH_POWER_SERIES_HPP
#define FINFISH_POWER_SERIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finfish/numeric.hpp"

namespace finfish {

// Exponents of (y, a, b, u) in one monomial.
using VarExp = std::array<int, 4>;

// Sparse polynomial in (y, a, b, u): exponent vector -> nonzero rational.
using Poly = std::map<VarExp, Rat>;

// Truncated power series in t whose t^k coefficient is a Poly. All arithmetic
// is exact; operands must share the same truncation order.
class MSeries {
 public:
  explicit MSeries(int order);
  static MSeries constant(int order, const Rat& c);
  static MSeries monomial(int order, const Rat& c, int dt, VarExp e = {0, 0, 0, 0});

  int order() const { return order_; }
  const Poly& coeff(int k) const;
  Rat coeff(int k, VarExp e) const;
  bool is_zero() const;

  MSeries& operator+=(const MSeries& o);
  MSeries& operator-=(const MSeries& o);
  friend MSeries operator+(MSeries x, const MSeries& y) { return x += y; }
  friend MSeries operator-(MSeries x, const MSeries& y) { return x -= y; }
  friend MSeries operator*(const MSeries& x, const MSeries& y);
  MSeries operator-() const;
  MSeries& mul_scalar(const Rat& c);
  MSeries pow(int e) const;

  // Requires an invertible (nonzero rational) constant term.
  MSeries inverse() const;

  // Substitute 1 for the selected variables.
  MSeries specialize(bool set_y, bool set_a, bool set_b, bool set_u) const;
  MSeries at_u1() const { return specialize(false, false, false, true); }

  // Substitute the u-free series U for u.
  MSeries subst_u(const MSeries& U) const;

  MSeries y_dy() const;     // term *= its y-exponent
  MSeries euler_t() const;  // t^k coefficient *= k
  MSeries theta_t() const;  // t^k coefficient *= k+1, i.e. d/dt of t*S

  MSeries delta_u() const;      // u^m -> u + u^2 + ... + u^m
  MSeries sum_below_u() const;  // u^m -> 1 + u + ... + u^{m-1}

  int max_u_degree() const;
  bool involves_u() const { return max_u_degree() > 0; }

  friend bool operator==(const MSeries& x, const MSeries& y);
  friend bool operator!=(const MSeries& x, const MSeries& y) { return !(x == y); }

  struct Diff {
    int t = 0;
    VarExp e{0, 0, 0, 0};
    Rat lhs, rhs;
  };
  // Lexicographically first differing coefficient, if any.
  static std::optional<Diff> first_difference(const MSeries& x, const MSeries& y);

 private:
  int order_;
  std::vector<Poly> c_;
};

// Unique solution of X = F(X) when F is a t-adic contraction; throws
// DivergenceError if an already-settled coefficient later changes or the
// iteration fails to stabilize.
MSeries solve_fixed_point(int order, const std::function<MSeries(const MSeries&)>& F,
                          const std::string& what = "fixed point");

}  // namespace finfish

#endif  // FINFISH_POWER_SERIES_HPP
