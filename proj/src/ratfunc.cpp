#include "kummerweb/ratfunc.hpp"

#include <cmath>

#include "kummerweb/errors.hpp"

namespace kummerweb {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) {
    throw Error("rational function with zero denominator");
  }
  if (numerator.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(BigRational(1));
    return;
  }
  const Polynomial g = gcd(numerator, denominator);
  if (!g.is_constant()) {
    numerator = divide_exact(numerator, g);
    denominator = divide_exact(denominator, g);
  }
  // Denominator becomes integer-primitive with positive leading coefficient;
  // the rational scale moves into the numerator.
  const BigRational c = denominator.content();
  num_ = numerator.scaled(BigRational(1) / c);
  den_ = denominator.scaled(BigRational(1) / c);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  if (exponent == 0) return RationalFunction(BigRational(1));
  RationalFunction r;
  r.num_ = num_.pow(exponent);
  r.den_ = den_.pow(exponent);
  return r;  // canonical already: powers of coprime polynomials stay coprime
}

std::string RationalFunction::render() const {
  if (den_ == Polynomial(BigRational(1))) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

RationalFunction RationalFunction::derivative(Var v) const {
  const Polynomial dn = (v == Var::x) ? num_.derivative_x() : num_.derivative_y();
  const Polynomial dd = (v == Var::x) ? den_.derivative_x() : den_.derivative_y();
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

BigRational RationalFunction::eval(const BigRational& x, const BigRational& y) const {
  const BigRational d = den_.eval(x, y);
  if (d == 0) throw PoleError("pole at exact point", den_.render());
  return num_.eval(x, y) / d;
}

std::complex<double> RationalFunction::eval(const std::complex<double>& x,
                                            const std::complex<double>& y,
                                            double pole_epsilon) const {
  const std::complex<double> d = den_.eval(x, y);
  const double scale = den_.magnitude_scale(x, y);
  if (std::abs(d) <= pole_epsilon * scale) {
    throw PoleError("pole within epsilon of point", den_.render());
  }
  return num_.eval(x, y) / d;
}

RationalFunction wedge(const RationalFunction& f, const RationalFunction& g) {
  return f.derivative(Var::x) * g.derivative(Var::y) -
         f.derivative(Var::y) * g.derivative(Var::x);
}

RationalFunction partial(const RationalFunction& f, Var v) { return f.derivative(v); }

}  // namespace kummerweb
