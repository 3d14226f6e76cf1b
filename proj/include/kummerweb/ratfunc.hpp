#ifndef KUMMERWEB_RATFUNC_HPP_
#define KUMMERWEB_RATFUNC_HPP_

#include <complex>
#include <string>

#include "kummerweb/polynomial.hpp"

namespace kummerweb {

enum class Var { x, y };

// Bivariate rational function in canonical form: numerator and denominator
// coprime, denominator an integer-primitive polynomial with positive leading
// coefficient (grlex, x > y). Canonical form is unique, so operator== is
// structural. Immutable after construction.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(BigRational(1)) {}  // zero
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(const BigRational& constant)
      : num_(constant), den_(BigRational(1)) {}

  static RationalFunction variable_x() {
    return RationalFunction(Polynomial::variable_x(), Polynomial(BigRational(1)));
  }
  static RationalFunction variable_y() {
    return RationalFunction(Polynomial::variable_y(), Polynomial(BigRational(1)));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(unsigned exponent) const;

  std::string render() const;

  // Exact partial derivative, canonical.
  RationalFunction derivative(Var v) const;

  // Exact evaluation; throws PoleError when the denominator vanishes at (x, y).
  BigRational eval(const BigRational& x, const BigRational& y) const;

  // Double-complex evaluation via Horner. Throws PoleError when the
  // denominator magnitude falls below pole_epsilon times its magnitude scale.
  std::complex<double> eval(const std::complex<double>& x,
                            const std::complex<double>& y,
                            double pole_epsilon = 1e-14) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// f_x * g_y - f_y * g_x, exact and canonical. Zero detection is structural.
RationalFunction wedge(const RationalFunction& f, const RationalFunction& g);

RationalFunction partial(const RationalFunction& f, Var v);

// Parses an expression over variables x, y with integer literals and
// + - * / ^ and parentheses. The grammar is documented in docs/grammar.md;
// canonical rendering emits the same grammar.
RationalFunction parse_ratfunc(const std::string& text);

}  // namespace kummerweb

#endif  // KUMMERWEB_RATFUNC_HPP_
