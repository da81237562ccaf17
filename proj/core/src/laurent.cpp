#include "pentagram/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "pentagram/error.hpp"

namespace pentagram {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int constant) {
  if (constant != 0) terms_.emplace(0, Scalar(constant));
}

LaurentPoly::LaurentPoly(const Scalar& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent) {
  LaurentPoly out;
  if (c != 0) out.terms_.emplace(exponent, c);
  return out;
}

Scalar LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Scalar LaurentPoly::evaluate(const Scalar& x) const {
  Scalar out = 0;
  for (const auto& [e, c] : terms_) out += c * power(x, e);
  return out;
}

LaurentPoly LaurentPoly::shifted(int exponent) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + exponent, c);
  return out;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw Error(ErrorCode::kDivisionByZero, "inverse of a non-monomial Laurent polynomial");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

void LaurentPoly::add_term(int exponent, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    if (e != 0) os << "*l^" << e;
  }
  return os.str();
}

// ----------------------------------------------------------------------- Poly

Poly::Poly(int constant) {
  if (constant != 0) c_.emplace_back(constant);
}

Poly::Poly(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Scalar& c, int degree) {
  if (c == 0) return Poly();
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
}

Scalar Poly::leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

int Poly::order_at_zero() const {
  if (c_.empty()) throw std::logic_error("order_at_zero of zero polynomial");
  int k = 0;
  while (c_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar out = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly out = *this;
  const Scalar lc = leading();
  for (auto& x : out.c_) x /= lc;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << format_rational(c_[i]);
    if (i == 1) os << "*" << var;
    if (i > 1) os << "*" << var << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db) + 1, Scalar(0));
  const Scalar lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] / lb;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(i - db + k)] -= c * b.coeff(k);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ----------------------------------------------------------- LaurentBivariate

LaurentBivariate::LaurentBivariate(const std::vector<LaurentPoly>& by_k) {
  for (std::size_t i = 0; i < by_k.size(); ++i)
    for (const auto& [e, c] : by_k[i].terms()) terms_.emplace(std::make_pair(static_cast<int>(i), e), c);
}

int LaurentBivariate::k_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

LaurentPoly LaurentBivariate::k_coefficient(int i) const {
  LaurentPoly out;
  for (auto it = terms_.lower_bound({i, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.first == i; ++it)
    out += LaurentPoly::monomial(it->second, it->first.second);
  return out;
}

std::vector<LaurentPoly> LaurentBivariate::by_k() const {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(k_degree() + 1));
  for (const auto& [key, c] : terms_) out[static_cast<std::size_t>(key.first)] += LaurentPoly::monomial(c, key.second);
  return out;
}

Scalar LaurentBivariate::coeff(int k_exp, int lambda_exp) const {
  auto it = terms_.find({k_exp, lambda_exp});
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar LaurentBivariate::evaluate(const Scalar& k, const Scalar& lambda) const {
  Scalar out = 0;
  for (const auto& [key, c] : terms_) out += c * power(k, key.first) * power(lambda, key.second);
  return out;
}

LaurentBivariate LaurentBivariate::k_derivative() const {
  LaurentBivariate out;
  for (const auto& [key, c] : terms_)
    if (key.first > 0) out.terms_.emplace(std::make_pair(key.first - 1, key.second), c * key.first);
  return out;
}

std::string LaurentBivariate::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(it->second);
    if (it->first.first != 0) os << "*k^" << it->first.first;
    if (it->first.second != 0) os << "*l^" << it->first.second;
  }
  return os.str();
}

}  // namespace pentagram
