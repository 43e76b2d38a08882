#include "finfish/numeric.hpp"

namespace finfish {

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw ExactnessError("exact_div: zero divisor");
  Int q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw ExactnessError("exact_div: " + num.str() + " not divisible by " + den.str());
  return q;
}

Int factorial(long n) {
  if (n < 0) throw ExactnessError("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  // r stays integral at every step: after multiplying by (n-k+i) the product
  // of i consecutive integers is divisible by i!.
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r = exact_div(r, Int(i));
  }
  return r;
}

}  // namespace finfish
