#include "pwe/rat_func.hpp"

#include "pwe/errors.hpp"

namespace pwe {

RatFunc::RatFunc(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) { reduce(); }

void RatFunc::reduce() {
  if (den_.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const ParamPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const BigRational lc = den_.leading_coef();
  if (lc != 1) {
    num_ *= BigRational(1 / lc);
    den_ *= BigRational(1 / lc);
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, NoReduce{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  if (den_.is_constant() && o.den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ZeroPolynomial("inverse of zero");
  RatFunc r(den_, num_, NoReduce{});
  const BigRational lc = r.den_.leading_coef();
  if (lc != 1) {
    r.num_ *= BigRational(1 / lc);
    r.den_ *= BigRational(1 / lc);
  }
  return r;
}

RatFunc RatFunc::shifted(Sym s, const BigRational& by) const {
  return RatFunc(num_.shifted(s, by), den_.shifted(s, by));
}

RatFunc RatFunc::negated(Sym s) const { return RatFunc(num_.negated(s), den_.negated(s)); }

BigRational RatFunc::evaluate(const BigRational& alpha, const BigRational& beta, const BigRational& omega) const {
  const BigRational d = den_.evaluate(alpha, beta, omega);
  if (d == 0) throw ZeroPolynomial("denominator vanishes at the evaluation point");
  return num_.evaluate(alpha, beta, omega) / d;
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace pwe
