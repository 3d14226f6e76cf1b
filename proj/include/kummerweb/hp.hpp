#ifndef KUMMERWEB_HP_HPP_
#define KUMMERWEB_HP_HPP_

#include <mpfr.h>

#include <complex>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace kummerweb::hp {

// Working precision of the self-validation oracle, in bits. 200 bits is about
// 60 decimal digits.
inline constexpr mpfr_prec_t kPrecision = 200;

// Minimal RAII value type over mpfr_t with just the operations the
// high-precision polylogarithm oracle needs.
class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  /*implicit*/ Real(double d) { mpfr_init2(v_, kPrecision); mpfr_set_d(v_, d, MPFR_RNDN); }
  /*implicit*/ Real(long n) { mpfr_init2(v_, kPrecision); mpfr_set_si(v_, n, MPFR_RNDN); }
  /*implicit*/ Real(int n) { mpfr_init2(v_, kPrecision); mpfr_set_si(v_, n, MPFR_RNDN); }
  explicit Real(const mpq_class& q) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, kPrecision);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 25) const;

  static Real pi();
  static Real zeta(unsigned long n);   // zeta(n) via mpfr
  static Real catalan();

  friend Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
#define KUMMERWEB_HP_BINOP(op, fn)                       \
  friend Real operator op(const Real& a, const Real& b) { \
    Real r;                                               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                      \
    return r;                                             \
  }
  KUMMERWEB_HP_BINOP(+, mpfr_add)
  KUMMERWEB_HP_BINOP(-, mpfr_sub)
  KUMMERWEB_HP_BINOP(*, mpfr_mul)
  KUMMERWEB_HP_BINOP(/, mpfr_div)
#undef KUMMERWEB_HP_BINOP
  Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  friend Real abs(const Real& a) {
    Real r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r;
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r;
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan(const Real& a) {
    Real r;
    mpfr_atan(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real atanh(const Real& a) {
    Real r;
    mpfr_atanh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r;
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r;
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r;
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_signbit(v_) != 0; }

 private:
  mpfr_t v_;
};

// Complex number over Real. Principal-branch log and sqrt follow the signed
// zero of the imaginary part, matching std::complex<double> semantics.
class Cplx {
 public:
  Cplx() = default;
  /*implicit*/ Cplx(Real re, Real im = Real(0)) : re_(std::move(re)), im_(std::move(im)) {}
  /*implicit*/ Cplx(double re) : re_(re) {}
  static Cplx make(double re, double im) { return Cplx(Real(re), Real(im)); }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }

  friend Cplx operator-(const Cplx& a) { return {-a.re_, -a.im_}; }
  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    const Real d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  Cplx& operator+=(const Cplx& b) { return *this = *this + b; }
  Cplx& operator-=(const Cplx& b) { return *this = *this - b; }
  Cplx& operator*=(const Cplx& b) { return *this = *this * b; }
  Cplx& operator/=(const Cplx& b) { return *this = *this / b; }

  friend Real abs(const Cplx& a) { return hypot(a.re_, a.im_); }
  friend Real real(const Cplx& a) { return a.re_; }
  friend Real imag(const Cplx& a) { return a.im_; }
  friend Cplx conj(const Cplx& a) { return {a.re_, -a.im_}; }
  friend Cplx log(const Cplx& a) {
    return {log(abs(a)), atan2(a.im_, a.re_)};
  }
  friend Cplx sqrt(const Cplx& a) {
    // Polar form; principal branch (argument halved from atan2's range).
    const Real r = sqrt(abs(a));
    const Real half_arg = atan2(a.im_, a.re_) / Real(2);
    return {r * cos(half_arg), r * sin(half_arg)};
  }

 private:
  Real re_;
  Real im_;
};

inline std::complex<double> to_std(const Cplx& z) {
  return {real(z).to_double(), imag(z).to_double()};
}

}  // namespace kummerweb::hp

#endif  // KUMMERWEB_HP_HPP_
