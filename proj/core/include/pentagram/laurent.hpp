#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/rational.hpp"

namespace pentagram {

// Sparse Laurent polynomial in lambda. No zero coefficient is ever stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT: Matrix<T> needs T(0) and T(1)
  LaurentPoly(const Scalar& constant);  // NOLINT

  static LaurentPoly monomial(const Scalar& c, int exponent);
  static LaurentPoly lambda(int exponent = 1) { return monomial(Scalar(1), exponent); }

  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar coeff(int exponent) const;
  // Require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  Scalar evaluate(const Scalar& x) const;
  LaurentPoly shifted(int exponent) const;  // times lambda^exponent

  // Exact inverse of a nonzero monomial; anything else throws
  // Error(kDivisionByZero).
  LaurentPoly monomial_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int exponent, const Scalar& c);
  std::map<int, Scalar> terms_;
};

// Dense univariate polynomial over Q; coefficient i multiplies x^i. The
// coefficient vector never ends in a zero.
class Poly {
 public:
  Poly() = default;
  Poly(int constant);  // NOLINT
  explicit Poly(std::vector<Scalar> coefficients);

  static Poly monomial(const Scalar& c, int degree);

  const std::vector<Scalar>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Scalar coeff(int i) const;
  Scalar leading() const;
  // Largest k with x^k dividing a nonzero polynomial.
  int order_at_zero() const;

  Scalar evaluate(const Scalar& x) const;
  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Quotient and remainder; throws Error(kDivisionByZero) for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// a / b, throwing std::logic_error when the division leaves a remainder.
Poly divexact(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// Polynomial in k with Laurent coefficients in lambda, keyed (k, lambda).
class LaurentBivariate {
 public:
  LaurentBivariate() = default;
  // by_k[i] is the coefficient of k^i.
  explicit LaurentBivariate(const std::vector<LaurentPoly>& by_k);

  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int k_degree() const;  // -1 for zero
  LaurentPoly k_coefficient(int i) const;
  std::vector<LaurentPoly> by_k() const;
  Scalar coeff(int k_exp, int lambda_exp) const;

  Scalar evaluate(const Scalar& k, const Scalar& lambda) const;
  LaurentBivariate k_derivative() const;

  friend bool operator==(const LaurentBivariate& a, const LaurentBivariate& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Scalar> terms_;
};

}  // namespace pentagram
