#include "finfish/bivariate.hpp"

#include <algorithm>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

void check_same_caps(const BiSeries& x, const BiSeries& y) {
  if (x.deg1() != y.deg1() || x.deg2() != y.deg2())
    throw StructureError("bivariate truncation caps differ");
}

}  // namespace

BiSeries::BiSeries(int d1, int d2) : d1_(d1), d2_(d2) {
  if (d1 < 0 || d2 < 0) throw UsageError("bivariate caps must be nonnegative");
  c_.assign(static_cast<size_t>(d1 + 1) * (d2 + 1), Rat(0));
}

BiSeries BiSeries::constant(int d1, int d2, const Rat& c) {
  BiSeries s(d1, d2);
  s.at(0, 0) = c;
  return s;
}

BiSeries BiSeries::monomial(int d1, int d2, const Rat& c, int e1, int e2) {
  BiSeries s(d1, d2);
  if (e1 < 0 || e2 < 0) throw UsageError("monomial exponents must be nonnegative");
  if (e1 <= d1 && e2 <= d2) s.at(e1, e2) = c;
  return s;
}

Rat BiSeries::coeff(int e1, int e2) const {
  if (e1 < 0 || e1 > d1_ || e2 < 0 || e2 > d2_)
    throw UsageError("bivariate coefficient index out of range");
  return at(e1, e2);
}

void BiSeries::add_term(int e1, int e2, const Rat& c) {
  if (e1 < 0 || e2 < 0) throw UsageError("monomial exponents must be nonnegative");
  if (e1 <= d1_ && e2 <= d2_) at(e1, e2) += c;
}

bool BiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

BiSeries BiSeries::recapped(int d1, int d2) const {
  BiSeries s(d1, d2);
  for (int i = 0; i <= std::min(d1, d1_); ++i)
    for (int j = 0; j <= std::min(d2, d2_); ++j) s.at(i, j) = at(i, j);
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_same_caps(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_same_caps(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BiSeries operator*(const BiSeries& x, const BiSeries& y) {
  check_same_caps(x, y);
  BiSeries r(x.d1_, x.d2_);
  for (int i1 = 0; i1 <= x.d1_; ++i1)
    for (int j1 = 0; j1 <= x.d2_; ++j1) {
      if (x.at(i1, j1) == 0) continue;
      for (int i2 = 0; i1 + i2 <= x.d1_; ++i2)
        for (int j2 = 0; j1 + j2 <= x.d2_; ++j2) {
          if (y.at(i2, j2) == 0) continue;
          r.at(i1 + i2, j1 + j2) += x.at(i1, j1) * y.at(i2, j2);
        }
    }
  return r;
}

BiSeries& BiSeries::mul_scalar(const Rat& c) {
  for (Rat& v : c_) v *= c;
  return *this;
}

BiSeries BiSeries::pow(int e) const {
  if (e < 0) throw UsageError("negative bivariate power");
  BiSeries r = constant(d1_, d2_, 1);
  BiSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

BiSeries BiSeries::inverse() const {
  if (at(0, 0) == 0) throw UsageError("bivariate inverse requires a nonzero constant term");
  // Split S = c(1 - N) with N free of constant term; invert by geometric series.
  Rat inv0 = 1 / at(0, 0);
  BiSeries n(d1_, d2_);
  for (int i = 0; i <= d1_; ++i)
    for (int j = 0; j <= d2_; ++j)
      if (i + j > 0) n.at(i, j) = -at(i, j) * inv0;
  BiSeries r = constant(d1_, d2_, 1);
  BiSeries term = constant(d1_, d2_, 1);
  for (int step = 0; step < d1_ + d2_; ++step) {
    term = term * n;
    if (term.is_zero()) break;
    r += term;
  }
  for (Rat& v : r.c_) v *= inv0;
  return r;
}

BiSeries BiSeries::dx1() const {
  BiSeries r(d1_, d2_);
  for (int i = 1; i <= d1_; ++i)
    for (int j = 0; j <= d2_; ++j) r.at(i - 1, j) = at(i, j) * i;
  return r;
}

BiSeries BiSeries::dx2() const {
  BiSeries r(d1_, d2_);
  for (int i = 0; i <= d1_; ++i)
    for (int j = 1; j <= d2_; ++j) r.at(i, j - 1) = at(i, j) * j;
  return r;
}

BiSeries BiSeries::compose(const BiSeries& s1, const BiSeries& s2) const {
  check_same_caps(s1, s2);
  int e1 = s1.deg1(), e2 = s1.deg2();
  std::vector<BiSeries> p1(static_cast<size_t>(d1_) + 1, BiSeries(e1, e2));
  p1[0] = BiSeries::constant(e1, e2, 1);
  for (int i = 1; i <= d1_; ++i) p1[i] = p1[i - 1] * s1;
  std::vector<BiSeries> p2(static_cast<size_t>(d2_) + 1, BiSeries(e1, e2));
  p2[0] = BiSeries::constant(e1, e2, 1);
  for (int j = 1; j <= d2_; ++j) p2[j] = p2[j - 1] * s2;
  BiSeries r(e1, e2);
  for (int i = 0; i <= d1_; ++i)
    for (int j = 0; j <= d2_; ++j) {
      const Rat& c = at(i, j);
      if (c == 0) continue;
      BiSeries term = p1[i] * p2[j];
      for (int u = 0; u <= e1; ++u)
        for (int v = 0; v <= e2; ++v) r.at(u, v) += c * term.at(u, v);
    }
  return r;
}

bool operator==(const BiSeries& x, const BiSeries& y) {
  check_same_caps(x, y);
  return x.c_ == y.c_;
}

Rat bivariate_lagrange(const BiSeries& phi1, const BiSeries& phi2, const BiSeries& F,
                       int n1, int n2) {
  if (n1 < 1 || n2 < 1)
    throw UsageError("kernel extraction needs n1, n2 >= 1; use direct_extract otherwise");
  if (phi1.coeff(0, 0) == 0 || phi2.coeff(0, 0) == 0)
    throw UsageError("shape series must have nonzero constant terms");
  int c1 = n1 - 1, c2 = n2 - 1;
  BiSeries p1 = phi1.recapped(c1, c2);
  BiSeries p2 = phi2.recapped(c1, c2);
  BiSeries f = F.recapped(c1 + 1, c2 + 1);  // keep degrees feeding the derivatives
  BiSeries f1 = f.dx1().recapped(c1, c2);
  BiSeries f2 = f.dx2().recapped(c1, c2);
  BiSeries f12 = f.dx1().dx2().recapped(c1, c2);
  BiSeries p1d2 = phi1.recapped(c1, c2 + 1).dx2().recapped(c1, c2);
  BiSeries p2d1 = phi2.recapped(c1 + 1, c2).dx1().recapped(c1, c2);
  BiSeries h = f12;
  h += (f1 * p1d2 * p1.inverse()).mul_scalar(n1);
  h += (f2 * p2d1 * p2.inverse()).mul_scalar(n2);
  BiSeries full = p1.pow(n1) * p2.pow(n2) * h;
  return full.coeff(c1, c2) / (Rat(n1) * n2);
}

Rat direct_extract(const BiSeries& phi1, const BiSeries& phi2, const BiSeries& F,
                   int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw UsageError("extraction orders must be nonnegative");
  if (phi1.coeff(0, 0) == 0 || phi2.coeff(0, 0) == 0)
    throw UsageError("shape series must have nonzero constant terms");
  BiSeries a1 = BiSeries::monomial(n1, n2, 1, 1, 0);
  BiSeries a2 = BiSeries::monomial(n1, n2, 1, 0, 1);
  BiSeries A1(n1, n2), A2(n1, n2);
  for (int step = 0; step <= n1 + n2 + 1; ++step) {
    BiSeries next1 = a1 * phi1.compose(A1, A2);
    BiSeries next2 = a2 * phi2.compose(A1, A2);
    if (next1 == A1 && next2 == A2) break;
    A1 = std::move(next1);
    A2 = std::move(next2);
  }
  return F.compose(A1, A2).coeff(n1, n2);
}

}  // namespace finfish
