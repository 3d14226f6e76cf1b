#include "kummerweb/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "kummerweb/errors.hpp"

namespace kummerweb {

BigRational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational rational_from_string(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw Error("unparsable rational: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

Polynomial::Polynomial(const BigRational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Polynomial Polynomial::variable_x() { return term(1, 1, 0); }
Polynomial Polynomial::variable_y() { return term(1, 0, 1); }

Polynomial Polynomial::term(const BigRational& coeff, int dx, int dy) {
  Polynomial p;
  if (coeff != 0) p.terms_[{dx, dy}] = coeff;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int Polynomial::degree_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
  return d;
}

int Polynomial::degree_y() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
  return d;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.dx + terms_.begin()->first.dy;
}

Monomial Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const BigRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m{ma.dx + mb.dx, ma.dy + mb.dy};
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial r(BigRational(1));
  Polynomial base = *this;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

Polynomial Polynomial::derivative_x() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.dx > 0) r.terms_[{m.dx - 1, m.dy}] = c * m.dx;
  }
  return r;
}

Polynomial Polynomial::derivative_y() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.dy > 0) r.terms_[{m.dx, m.dy - 1}] = c * m.dy;
  }
  return r;
}

BigRational Polynomial::eval(const BigRational& x, const BigRational& y) const {
  // Dense-in-x Horner with exact powers of y per coefficient.
  const int dx = degree_x();
  std::vector<BigRational> xcoeff(static_cast<std::size_t>(dx) + 1, BigRational(0));
  for (const auto& [m, c] : terms_) {
    BigRational yp(1);
    for (int k = 0; k < m.dy; ++k) yp *= y;
    xcoeff[static_cast<std::size_t>(m.dx)] += c * yp;
  }
  BigRational acc(0);
  for (auto it = xcoeff.rbegin(); it != xcoeff.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::complex<double> to_cd(const BigRational& q) { return {q.get_d(), 0.0}; }

}  // namespace

std::complex<double> Polynomial::eval(const std::complex<double>& x,
                                      const std::complex<double>& y) const {
  const int dx = degree_x();
  const int dy = degree_y();
  // coefficient table c[dx][dy]
  std::vector<std::vector<std::complex<double>>> c(
      static_cast<std::size_t>(dx) + 1,
      std::vector<std::complex<double>>(static_cast<std::size_t>(dy) + 1));
  for (const auto& [m, v] : terms_) {
    c[static_cast<std::size_t>(m.dx)][static_cast<std::size_t>(m.dy)] = to_cd(v);
  }
  std::complex<double> acc = 0.0;
  for (int i = dx; i >= 0; --i) {
    std::complex<double> row = 0.0;
    for (int j = dy; j >= 0; --j) {
      row = row * y + c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    acc = acc * x + row;
  }
  return acc;
}

double Polynomial::magnitude_scale(const std::complex<double>& x,
                                   const std::complex<double>& y) const {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    s += std::abs(c.get_d()) * std::pow(ax, m.dx) * std::pow(ay, m.dy);
  }
  return s;
}

BigRational Polynomial::content() const {
  if (terms_.empty()) return BigRational(0);
  mpz_class num_gcd(0);
  mpz_class den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_coefficient() < 0) content = -content;
  return content;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  return scaled(BigRational(1) / content());
}

void Polynomial::set_term(Monomial m, const BigRational& c) {
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    BigRational a = negative ? BigRational(-c) : c;
    std::ostringstream mono;
    if (m.dx > 0) {
      mono << 'x';
      if (m.dx > 1) mono << '^' << m.dx;
    }
    if (m.dy > 0) {
      if (m.dx > 0) mono << '*';
      mono << 'y';
      if (m.dy > 1) mono << '^' << m.dy;
    }
    const std::string ms = mono.str();
    if (ms.empty()) {
      out << to_string(a);
    } else if (a == 1) {
      out << ms;
    } else {
      out << to_string(a) << '*' << ms;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd over Q[x,y]: view polynomials in (Q[y])[x], run a primitive Euclidean
// remainder sequence in x, and combine with the gcd of the y-contents.
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial over Q in y. Invariant: no trailing zeros.
using YPoly = std::vector<BigRational>;

void ytrim(YPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool yzero(const YPoly& p) { return p.empty(); }
int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly ymul(const YPoly& a, const YPoly& b) {
  if (yzero(a) || yzero(b)) return {};
  YPoly r(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ytrim(r);
  return r;
}

YPoly yscale(const YPoly& a, const BigRational& c) {
  if (c == 0) return {};
  YPoly r = a;
  for (auto& v : r) v *= c;
  return r;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ytrim(r);
  return r;
}

// Remainder of a by b over the field Q(y)... actually over Q: plain division.
YPoly yrem(YPoly a, const YPoly& b) {
  while (!yzero(a) && ydeg(a) >= ydeg(b)) {
    const BigRational q = a.back() / b.back();
    const int shift = ydeg(a) - ydeg(b);
    YPoly t(static_cast<std::size_t>(shift), BigRational(0));
    t.insert(t.end(), b.begin(), b.end());
    a = ysub(a, yscale(t, q));
  }
  return a;
}

// Primitive integer form with positive leading coefficient.
YPoly ynormalize(YPoly p) {
  ytrim(p);
  if (yzero(p)) return p;
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& c : p) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRational content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.back() < 0) content = -content;
  for (auto& c : p) c /= content;
  return p;
}

YPoly ygcd(YPoly a, YPoly b) {
  ytrim(a);
  ytrim(b);
  while (!yzero(b)) {
    YPoly r = yrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return ynormalize(std::move(a));
}

// Exact division over Q[y]; throws if not a multiple.
YPoly ydiv_exact(YPoly a, const YPoly& b) {
  if (yzero(b)) throw Error("ydiv_exact by zero");
  YPoly q(yzero(a) ? 0 : std::max(0, ydeg(a) - ydeg(b)) + 1, BigRational(0));
  while (!yzero(a)) {
    if (ydeg(a) < ydeg(b)) throw Error("ydiv_exact: not a multiple");
    const BigRational c = a.back() / b.back();
    const int shift = ydeg(a) - ydeg(b);
    q[static_cast<std::size_t>(shift)] = c;
    YPoly t(static_cast<std::size_t>(shift), BigRational(0));
    t.insert(t.end(), b.begin(), b.end());
    a = ysub(a, yscale(t, c));
  }
  ytrim(q);
  return q;
}

// (Q[y])[x] view: coefficient of x^i is a YPoly. Invariant: back() nonzero.
using XPoly = std::vector<YPoly>;

void xtrim(XPoly& p) {
  while (!p.empty() && yzero(p.back())) p.pop_back();
}

bool xzero(const XPoly& p) { return p.empty(); }
int xdeg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

XPoly to_xpoly(const Polynomial& p) {
  XPoly r(static_cast<std::size_t>(p.degree_x()) + 1);
  for (const auto& [m, c] : p.terms()) {
    auto& yp = r[static_cast<std::size_t>(m.dx)];
    if (ydeg(yp) < m.dy) yp.resize(static_cast<std::size_t>(m.dy) + 1, BigRational(0));
    yp[static_cast<std::size_t>(m.dy)] = c;
  }
  xtrim(r);
  return r;
}

Polynomial from_xpoly(const XPoly& p) {
  Polynomial r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (p[i][j] != 0) r.set_term({static_cast<int>(i), static_cast<int>(j)}, p[i][j]);
    }
  }
  return r;
}

YPoly xcontent(const XPoly& p) {
  YPoly g;
  for (const auto& c : p) {
    if (!yzero(c)) g = ygcd(g, c);
  }
  return g;
}

XPoly xdiv_content(const XPoly& p, const YPoly& content) {
  XPoly r = p;
  for (auto& c : r) {
    if (!yzero(c)) c = ydiv_exact(c, content);
  }
  return r;
}

XPoly xscale(const XPoly& p, const YPoly& s) {
  XPoly r = p;
  for (auto& c : r) c = ymul(c, s);
  return r;
}

XPoly xsub(XPoly a, const XPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ysub(a[i], b[i]);
  xtrim(a);
  return a;
}

XPoly xshift_mul(const XPoly& p, int shift, const YPoly& c) {
  XPoly r(static_cast<std::size_t>(shift));
  for (const auto& v : p) r.push_back(ymul(v, c));
  xtrim(r);
  return r;
}

// Fraction-free remainder of a by b over (Q[y])[x]. Differs from the formal
// pseudo-remainder by extra lc(b) factors, which the primitive-part step of
// the caller removes anyway.
XPoly xprem(XPoly a, const XPoly& b) {
  const YPoly lcb = b.back();
  while (!xzero(a) && xdeg(a) >= xdeg(b)) {
    const YPoly lca = a.back();
    const int shift = xdeg(a) - xdeg(b);
    a = xsub(xscale(a, lcb), xshift_mul(b, shift, lca));
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Polynomial(BigRational(1));

  XPoly pa = to_xpoly(a);
  XPoly pb = to_xpoly(b);

  if (xdeg(pa) == 0 && xdeg(pb) == 0) {
    // Both free of x: plain univariate gcd in y.
    return from_xpoly({ygcd(pa[0], pb[0])});
  }

  const YPoly ca = xcontent(pa);
  const YPoly cb = xcontent(pb);
  const YPoly cg = ygcd(ca, cb);
  pa = xdiv_content(pa, ca);
  pb = xdiv_content(pb, cb);

  if (xdeg(pa) < xdeg(pb)) std::swap(pa, pb);
  while (!xzero(pb) && xdeg(pb) > 0) {
    XPoly r = xprem(pa, pb);
    if (!xzero(r)) r = xdiv_content(r, xcontent(r));
    pa = std::move(pb);
    pb = std::move(r);
  }
  XPoly core;
  if (xzero(pb)) {
    core = pa;  // x-primitive gcd
  } else {
    // Remainder sequence dropped to x-degree 0 on primitive inputs: the
    // x-part of the gcd is trivial.
    core = XPoly{YPoly{BigRational(1)}};
  }
  Polynomial result = from_xpoly(xscale(core, cg));
  return result.primitive();
}

Polynomial divide_exact(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw Error("divide_exact by zero polynomial");
  Polynomial r = n;
  Polynomial q;
  const Monomial dm = d.leading_monomial();
  const BigRational& dc = d.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial rm = r.leading_monomial();
    if (rm.dx < dm.dx || rm.dy < dm.dy) {
      throw Error("divide_exact: not an exact multiple");
    }
    const Monomial qm{rm.dx - dm.dx, rm.dy - dm.dy};
    const BigRational qc = r.leading_coefficient() / dc;
    const Polynomial t = Polynomial::term(qc, qm.dx, qm.dy);
    q += t;
    r -= t * d;
  }
  return q;
}

}  // namespace kummerweb
