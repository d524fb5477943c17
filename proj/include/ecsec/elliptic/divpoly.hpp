#pragma once

#include <map>

#include "ecsec/arith/poly.hpp"
#include "ecsec/elliptic/curve.hpp"

namespace ecsec {

// Division polynomials in x alone: f_n = psi_n for odd n and psi_n / psi_2
// for even n, where psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6. For odd N the
// roots of f_N are the x-coordinates of the nonzero N-torsion points.
template <FieldElement F>
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const Curve<F>& e) : z_(e.zero()) {
    const F one = z_.one();
    auto c = [&](long v) { return z_.from_int(v); };
    psi2_sq_ = Poly<F>(z_, {e.b6(), c(2) * e.b4(), e.b2(), c(4)});
    cache_[0] = Poly<F>(z_);
    cache_[1] = Poly<F>::constant(one);
    cache_[2] = Poly<F>::constant(one);
    cache_[3] = Poly<F>(z_, {e.b8(), c(3) * e.b6(), c(3) * e.b4(), e.b2(), c(3)});
    cache_[4] = Poly<F>(z_, {e.b4() * e.b8() - e.b6() * e.b6(), e.b2() * e.b8() - e.b4() * e.b6(), c(10) * e.b8(),
                             c(10) * e.b6(), c(5) * e.b4(), e.b2(), c(2)});
  }

  const Poly<F>& psi2_squared() const { return psi2_sq_; }

  const Poly<F>& operator()(int n) {
    if (n < 0) throw DomainError("negative division polynomial index");
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    Poly<F> r;
    const int m = n / 2;
    if (n % 2 == 1) {
      Poly<F> t1 = (*this)(m + 2) * (*this)(m).pow(3);
      Poly<F> t2 = (*this)(m - 1) * (*this)(m + 1).pow(3);
      const Poly<F> f2 = psi2_sq_ * psi2_sq_;
      if (m % 2 == 0)
        t1 = t1 * f2;
      else
        t2 = t2 * f2;
      r = t1 - t2;
    } else {
      r = (*this)(m) * ((*this)(m + 2) * (*this)(m - 1).pow(2) - (*this)(m - 2) * (*this)(m + 1).pow(2));
    }
    return cache_[n] = std::move(r);
  }

 private:
  F z_;
  Poly<F> psi2_sq_;
  std::map<int, Poly<F>> cache_;
};

template <FieldElement F>
Poly<F> division_polynomial(const Curve<F>& e, int n) {
  DivisionPolynomials<F> dp(e);
  return dp(n);
}

}  // namespace ecsec
