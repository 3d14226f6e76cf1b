#ifndef KUMMERWEB_POLYNOMIAL_HPP_
#define KUMMERWEB_POLYNOMIAL_HPP_

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

namespace kummerweb {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0 once
// canonicalized; the helpers below never leave a value un-canonicalized.
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational rational_from_string(const std::string& text);
std::string to_string(const BigRational& q);

// Exponent pair of one monomial x^dx * y^dy.
struct Monomial {
  int dx = 0;
  int dy = 0;
  friend bool operator==(Monomial a, Monomial b) = default;
};

// Graded lexicographic order with x > y, descending, so map iteration starts
// at the leading term.
struct GrlexDescending {
  bool operator()(Monomial a, Monomial b) const {
    const int ta = a.dx + a.dy;
    const int tb = b.dx + b.dy;
    if (ta != tb) return ta > tb;
    return a.dx > b.dx;
  }
};

// Bivariate polynomial over BigRational. No zero coefficient is ever stored,
// so structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigRational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(const BigRational& constant);
  static Polynomial variable_x();
  static Polynomial variable_y();
  static Polynomial term(const BigRational& coeff, int dx, int dy);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;
  const TermMap& terms() const { return terms_; }

  // Leading data in the grlex order.
  Monomial leading_monomial() const;
  const BigRational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial scaled(const BigRational& c) const;
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial derivative_x() const;
  Polynomial derivative_y() const;

  BigRational eval(const BigRational& x, const BigRational& y) const;
  // Horner in y inside Horner in x.
  std::complex<double> eval(const std::complex<double>& x,
                            const std::complex<double>& y) const;
  // Sum of |coeff| * |x|^dx * |y|^dy; the natural magnitude scale of eval at (x, y).
  double magnitude_scale(const std::complex<double>& x,
                         const std::complex<double>& y) const;

  // Signed content: +/- gcd of coefficient numerators over lcm of
  // denominators, sign taken from the leading coefficient. Dividing by it
  // yields the primitive integer form with positive leading coefficient.
  BigRational content() const;
  Polynomial primitive() const;

  std::string render() const;

  void set_term(Monomial m, const BigRational& c);  // erases on c == 0

 private:
  TermMap terms_;
};

// Gcd over Q[x,y], returned primitive with positive leading coefficient.
// Constant nonzero inputs give 1.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Quotient of an exact multiple; throws Error if `d` does not divide `n`.
Polynomial divide_exact(const Polynomial& n, const Polynomial& d);

}  // namespace kummerweb

#endif  // KUMMERWEB_POLYNOMIAL_HPP_
