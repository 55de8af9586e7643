#pragma once

#include <array>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ising {

/// Element of the cyclotomic field Q(zeta) with zeta = exp(i*pi/4).
///
/// Values are c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with rational
/// coefficients; zeta^4 = -1 is the sole reduction rule, so the power-basis
/// coordinates are unique and equality is component-wise.  Internally the
/// four coefficients share one positive denominator with
/// gcd(n0,n1,n2,n3,den) = 1, which makes the stored representation (and the
/// serialization key built from it) canonical.
class Cyclo {
public:
  Cyclo() : den_(1) {}

  Cyclo(long value) : den_(1) { num_[0] = value; }

  explicit Cyclo(const mpq_class& value) : den_(value.get_den()) {
    num_[0] = value.get_num();
    normalize();
  }

  /// c0 + c1*zeta + c2*zeta^2 + c3*zeta^3.
  static Cyclo from_coeffs(const mpq_class& c0, const mpq_class& c1,
                           const mpq_class& c2, const mpq_class& c3) {
    Cyclo r;
    mpz_class d = lcm(lcm(c0.get_den(), c1.get_den()),
                      lcm(c2.get_den(), c3.get_den()));
    const std::array<const mpq_class*, 4> cs = {&c0, &c1, &c2, &c3};
    for (int i = 0; i < 4; ++i)
      r.num_[i] = cs[i]->get_num() * (d / cs[i]->get_den());
    r.den_ = d;
    r.normalize();
    return r;
  }

  /// zeta^power for any integer power (reduced via zeta^4 = -1).
  static Cyclo zeta(int power = 1) {
    int p = power % 8;
    if (p < 0) p += 8;
    Cyclo r;
    r.num_[0] = 0;
    r.num_[p % 4] = (p < 4) ? 1 : -1;
    return r;
  }

  static Cyclo i() { return zeta(2); }
  static Cyclo sqrt2() { return zeta(1) - zeta(3); }
  static Cyclo inv_sqrt2() { return sqrt2() * Cyclo(mpq_class(1, 2)); }

  /// Coefficient of zeta^k, in lowest terms with positive denominator.
  mpq_class coeff(int k) const {
    mpq_class q(num_[k], den_);
    q.canonicalize();
    return q;
  }

  bool is_zero() const {
    return num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0;
  }

  bool is_rational() const {
    return num_[1] == 0 && num_[2] == 0 && num_[3] == 0;
  }

  mpq_class rational_value() const {
    if (!is_rational())
      throw std::domain_error("Cyclo: value is not rational");
    return coeff(0);
  }

  Cyclo operator-() const {
    Cyclo r(*this);
    for (auto& n : r.num_) n = -n;
    return r;
  }

  Cyclo operator+(const Cyclo& o) const {
    Cyclo r;
    mpz_class g = gcd(den_, o.den_);
    mpz_class la = o.den_ / g;  // scale for *this
    mpz_class lb = den_ / g;    // scale for o
    for (int i = 0; i < 4; ++i) r.num_[i] = num_[i] * la + o.num_[i] * lb;
    r.den_ = den_ * la;
    r.normalize();
    return r;
  }

  Cyclo operator-(const Cyclo& o) const { return *this + (-o); }

  Cyclo operator*(const Cyclo& o) const {
    Cyclo r;
    const auto& a = num_;
    const auto& b = o.num_;
    // Convolution in the power basis, folding with zeta^4 = -1.
    r.num_[0] = a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1];
    r.num_[1] = a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2];
    r.num_[2] = a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3];
    r.num_[3] = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0];
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  /// Complex conjugation: zeta -> zeta^7 = -zeta^3.
  Cyclo conj() const {
    Cyclo r;
    r.num_[0] = num_[0];
    r.num_[1] = -num_[3];
    r.num_[2] = -num_[2];
    r.num_[3] = -num_[1];
    r.den_ = den_;
    return r;
  }

  /// Galois automorphism zeta -> zeta^k for odd k.
  Cyclo galois(int k) const {
    Cyclo r;
    r.den_ = den_;
    r.num_[0] = num_[0];
    switch (((k % 8) + 8) % 8) {
      case 1:
        return *this;
      case 3:
        r.num_[1] = num_[3];
        r.num_[2] = -num_[2];
        r.num_[3] = num_[1];
        return r;
      case 5:
        r.num_[1] = -num_[1];
        r.num_[2] = num_[2];
        r.num_[3] = -num_[3];
        return r;
      case 7:
        return conj();
      default:
        throw std::invalid_argument("Cyclo::galois: exponent must be odd");
    }
  }

  /// Multiplicative inverse, by rationalizing against the three field
  /// conjugates: 1/x = g3(x)g5(x)g7(x) / N(x) with N(x) rational.
  Cyclo inv() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    Cyclo y = galois(3) * galois(5) * galois(7);
    Cyclo n = *this * y;
    // The norm x*g3(x)*g5(x)*g7(x) is fixed by the whole Galois group.
    if (!n.is_rational())
      throw std::logic_error("Cyclo::inv: norm is not rational");
    mpq_class inv_norm(n.den_, n.num_[0]);
    inv_norm.canonicalize();
    Cyclo r = y;
    for (auto& m : r.num_) m *= inv_norm.get_num();
    r.den_ *= inv_norm.get_den();
    r.normalize();
    return r;
  }

  Cyclo operator/(const Cyclo& o) const { return *this * o.inv(); }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  bool operator==(const Cyclo& o) const {
    return den_ == o.den_ && num_[0] == o.num_[0] && num_[1] == o.num_[1] &&
           num_[2] == o.num_[2] && num_[3] == o.num_[3];
  }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  /// |x|^2 = x * conj(x), which lies in the real subfield.
  Cyclo abs_squared() const { return *this * conj(); }

  bool is_unit() const { return abs_squared() == Cyclo(1); }

  /// Floating-point embedding at zeta = exp(i*pi/4).  Read-only bridge to
  /// the numerical oracle; exactness lives in the rational coordinates.
  std::complex<double> to_complex() const {
    static const std::complex<double> z{M_SQRT1_2, M_SQRT1_2};
    std::complex<double> acc{0.0, 0.0};
    std::complex<double> zp{1.0, 0.0};
    double d = mpz_get_d(den_.get_mpz_t());
    for (int k = 0; k < 4; ++k) {
      acc += mpz_get_d(num_[k].get_mpz_t()) / d * zp;
      zp *= z;
    }
    return acc;
  }

  /// Canonical key: the unique normalized coordinates, "n0,n1,n2,n3/d".
  std::string key() const {
    std::string s;
    s.reserve(16);
    for (int k = 0; k < 4; ++k) {
      s += num_[k].get_str();
      s += ',';
    }
    s += den_.get_str();
    return s;
  }

  /// Human-readable form in the power basis.
  std::string str() const {
    static const char* pow[4] = {"", "z", "z^2", "z^3"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
      if (num_[k] == 0) continue;
      mpq_class c = coeff(k);
      if (!s.empty() && c > 0) s += "+";
      if (k == 0) {
        s += c.get_str();
      } else if (c == 1) {
        s += pow[k];
      } else if (c == -1) {
        s += std::string("-") + pow[k];
      } else {
        s += c.get_str() + std::string("*") + pow[k];
      }
    }
    return s.empty() ? "0" : s;
  }

  const mpz_class& numerator(int k) const { return num_[k]; }
  const mpz_class& denominator() const { return den_; }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Cyclo: zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      for (auto& n : num_) n = -n;
    }
    mpz_class g = den_;
    for (const auto& n : num_) {
      if (g == 1) break;
      g = gcd(g, n);
    }
    if (g > 1) {
      den_ /= g;
      for (auto& n : num_) n /= g;
    }
  }

  std::array<mpz_class, 4> num_;  // coordinates of 1, zeta, zeta^2, zeta^3
  mpz_class den_;                 // > 0, coprime to the numerator gcd
};

inline Cyclo operator*(long a, const Cyclo& b) { return Cyclo(a) * b; }

inline Cyclo conj(const Cyclo& x) { return x.conj(); }

}  // namespace ising
