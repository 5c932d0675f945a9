//
// Project     : mint
// Module      : lorentz
// Description : Lorentz-scale functionals of simple functions
//
#pragma once

#include "mint/spaces.hpp"

namespace mint {

// A positive, possibly infinite exponent.
class Exponent {
 public:
  Exponent(double value);  // implicit on purpose: lp_norm(f, 2.0) reads well
  static Exponent inf() noexcept;

  double value() const noexcept { return value_; }
  bool is_inf() const noexcept;

 private:
  Exponent() = default;
  double value_ = 0.0;
};

// Solves 1/p' = 1 - 1/p. Returns +inf for p = 1, a negative value for p < 1.
double dual_exponent(Exponent p) noexcept;

// (sum_x |f(x)|^p mu(x))^(1/p); max |f| for p = inf.
double lp_norm(const SimpleFunction& f, Exponent p);

// sup_{lambda>0} lambda * mu(|f| >= lambda)^(1/p), the sup swept over the
// distinct non-zero values of |f| where it is attained.
double weak_norm(const SimpleFunction& f, Exponent p);

// The layer integral int_0^inf mu(|f| > lambda)^(1/p) dlambda, evaluated as
// a finite sum over the level sets of |f|. Requires 1 <= p < inf.
double lorentz1_rearrangement(const SimpleFunction& f, Exponent p);

// sup |sum f g mu| over the unit ball of the weak dual space L^{p',inf},
// computed exactly. Requires 1 < p < inf and support of at most 20 points.
double lorentz1_dual(const SimpleFunction& f, Exponent p);

}  // namespace mint
