#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace nbpoly {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored ascending by degree with no trailing zeros;
/// the zero polynomial is the empty sequence. Values are immutable in
/// spirit: every operation returns a canonical result, so instances can
/// be shared freely across threads.
class Polynomial {
 public:
  using Coeff = boost::multiprecision::cpp_int;

  Polynomial() = default;  // zero
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff value);
  static Polynomial one() { return constant(1); }
  /// c * x^degree
  static Polynomial monomial(int degree, Coeff c = 1);
  /// (1+x)^k, built with the multiplicative binomial recurrence.
  static Polynomial binomial_power(int k);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  Coeff coefficient(int k) const;
  Coeff constant_term() const { return coefficient(0); }

  Coeff evaluate(const Coeff& t) const;

  /// Multiply by x^k.
  Polynomial shifted(int k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

  /// "1 + 4*x + 2*x^2"; zero terms omitted, ascending degrees; "0" for zero.
  std::string to_string() const;
  /// Decimal strings indexed by degree, for serialization of large coefficients.
  std::vector<std::string> to_decimal_strings() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

}  // namespace nbpoly
