#include "nbpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nbpoly {

Polynomial Polynomial::constant(Coeff value) {
  Polynomial p;
  if (value != 0) p.c_.push_back(std::move(value));
  return p;
}

Polynomial Polynomial::monomial(int degree, Coeff c) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  Polynomial p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Coeff(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

Polynomial Polynomial::binomial_power(int k) {
  if (k < 0) throw std::invalid_argument("binomial_power: negative exponent");
  Polynomial p;
  p.c_.resize(static_cast<std::size_t>(k) + 1);
  Coeff c = 1;
  p.c_[0] = c;
  for (int i = 0; i < k; ++i) {
    c = c * (k - i) / (i + 1);  // exact: C(k, i+1) = C(k, i) * (k-i) / (i+1)
    p.c_[static_cast<std::size_t>(i) + 1] = c;
  }
  return p;
}

Polynomial::Coeff Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Polynomial::Coeff Polynomial::evaluate(const Coeff& t) const {
  Coeff acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  Polynomial p;
  p.c_.reserve(c_.size() + static_cast<std::size_t>(k));
  p.c_.assign(static_cast<std::size_t>(k), Coeff(0));
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Polynomial::Coeff(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.trim();
  return p;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Coeff& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::vector<std::string> Polynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

}  // namespace nbpoly
