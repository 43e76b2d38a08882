#ifndef FINFISH_BIVARIATE_HPP
#define FINFISH_BIVARIATE_HPP

#include <vector>

#include "finfish/numeric.hpp"

namespace finfish {

// Dense truncated power series in two variables, capped at degree d1 in the
// first and d2 in the second. Used both for the shape functions (in x1, x2)
// and for the solved series (in a1, a2).
class BiSeries {
 public:
  BiSeries(int d1, int d2);
  static BiSeries constant(int d1, int d2, const Rat& c);
  static BiSeries monomial(int d1, int d2, const Rat& c, int e1, int e2);

  int deg1() const { return d1_; }
  int deg2() const { return d2_; }
  Rat coeff(int e1, int e2) const;
  void add_term(int e1, int e2, const Rat& c);
  bool is_zero() const;

  // Copy into a grid with different caps; shrinking truncates.
  BiSeries recapped(int d1, int d2) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries x, const BiSeries& y) { return x += y; }
  friend BiSeries operator-(BiSeries x, const BiSeries& y) { return x -= y; }
  friend BiSeries operator*(const BiSeries& x, const BiSeries& y);
  BiSeries& mul_scalar(const Rat& c);
  BiSeries pow(int e) const;
  BiSeries inverse() const;  // requires nonzero constant term

  BiSeries dx1() const;  // partial derivative in the first variable
  BiSeries dx2() const;

  // Substitute s1 for the first variable and s2 for the second; the result
  // takes its caps from s1/s2, which must agree.
  BiSeries compose(const BiSeries& s1, const BiSeries& s2) const;

  friend bool operator==(const BiSeries& x, const BiSeries& y);
  friend bool operator!=(const BiSeries& x, const BiSeries& y) { return !(x == y); }

 private:
  int d1_, d2_;
  std::vector<Rat> c_;  // (d1+1) x (d2+1), row-major in the first variable
  Rat& at(int e1, int e2) { return c_[static_cast<size_t>(e1) * (d2_ + 1) + e2]; }
  const Rat& at(int e1, int e2) const {
    return c_[static_cast<size_t>(e1) * (d2_ + 1) + e2];
  }
};

// [a1^n1 a2^n2] F(A1, A2) for the system A1 = a1 phi1(A1,A2),
// A2 = a2 phi2(A1,A2), by the kernel form of bivariate Lagrange inversion:
//   1/(n1 n2) [x1^{n1-1} x2^{n2-1}] phi1^{n1} phi2^{n2} H,
//   H = F_12 + n1 F_1 phi1_2/phi1 + n2 F_2 phi2_1/phi2.
// Requires n1, n2 >= 1 and nonzero constant terms in phi1, phi2.
Rat bivariate_lagrange(const BiSeries& phi1, const BiSeries& phi2, const BiSeries& F,
                       int n1, int n2);

// Same coefficient by solving the system as truncated series in (a1, a2)
// and composing F; works for all n1, n2 >= 0.
Rat direct_extract(const BiSeries& phi1, const BiSeries& phi2, const BiSeries& F,
                   int n1, int n2);

}  // namespace finfish

#endif  // FINFISH_BIVARIATE_HPP
