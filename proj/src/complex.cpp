#include "hyperid/complex.hpp"

#include <stdexcept>

namespace hyperid {

Complex Complex::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return Complex(Real::parse(s));
  s.pop_back();
  // Split at the last sign that is not part of an exponent or leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return Real::parse(t[0] == '+' ? t.substr(1) : t);
  };
  if (split == std::string::npos) return Complex(Real(0), imag_part(s));
  return Complex(Real::parse(s.substr(0, split)), imag_part(s.substr(split)));
}

std::string Complex::to_string(int digits) const {
  if (im.is_zero()) return re.to_string(digits);
  std::string i = im.to_string(digits);
  if (i[0] != '-') i = "+" + i;
  return re.to_string(digits) + i + "i";
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator-(const Complex& x) { return {-x.re, -x.im}; }
Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }

Complex operator*(const Complex& x, const Complex& y) {
  if (x.im.is_zero() && y.im.is_zero()) return {x.re * y.re, Real(0)};
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Complex operator/(const Complex& x, const Complex& y) {
  if (y.is_zero()) throw std::domain_error("complex division by zero");
  if (y.im.is_zero()) return {x.re / y.re, x.im / y.re};
  Real d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

Complex operator*(const Complex& x, const Real& y) { return {x.re * y, x.im * y}; }
Complex operator/(const Complex& x, const Real& y) { return {x.re / y, x.im / y}; }

bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }

Complex conj(const Complex& x) { return {x.re, -x.im}; }
Real abs(const Complex& x) { return x.im.is_zero() ? abs(x.re) : hypot(x.re, x.im); }
Real norm(const Complex& x) { return x.re * x.re + x.im * x.im; }
Real arg(const Complex& x) { return atan2(x.im, x.re); }

Complex exp(const Complex& x) {
  Real m = exp(x.re);
  if (x.im.is_zero()) return {m, Real(0)};
  return {m * cos(x.im), m * sin(x.im)};
}

Complex log(const Complex& x) {
  if (x.is_zero()) throw std::domain_error("log of zero");
  if (x.im.is_zero() && x.re.sign() > 0) return {log(x.re), Real(0)};
  return {log(abs(x)), arg(x)};
}

Complex sqrt(const Complex& x) {
  if (x.im.is_zero()) {
    if (x.re.sign() >= 0) return {sqrt(x.re), Real(0)};
    return {Real(0), sqrt(-x.re)};
  }
  Real m = abs(x);
  Real r = sqrt((m + x.re) / 2);
  Real i = sqrt((m - x.re) / 2);
  if (x.im.sign() < 0) i = -i;
  return {r, i};
}

Complex sin(const Complex& x) {
  if (x.im.is_zero()) return {sin(x.re), Real(0)};
  return {sin(x.re) * cosh(x.im), cos(x.re) * sinh(x.im)};
}

Complex pow(const Complex& x, long n) {
  if (x.im.is_zero()) return {pow(x.re, n), Real(0)};
  Complex result(1);
  Complex base = x;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return n < 0 ? Complex(1) / result : result;
}

Complex pow(const Complex& x, const Complex& y) {
  if (y.is_real() && y.re.is_integer() && abs(y.re) < Real(1L << 30)) return pow(x, y.re.to_long());
  if (x.is_zero()) return Complex(0);
  return exp(log(x) * y);
}

Real distance_to_nonpositive_integer(const Complex& x) {
  Real m = round(x.re);
  if (m.sign() > 0) m = Real(0);
  return hypot(x.re - m, x.im);
}

}  // namespace hyperid
