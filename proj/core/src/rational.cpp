#include "pentagram/rational.hpp"

#include <cctype>

#include "pentagram/error.hpp"

namespace pentagram {
namespace {

bool valid_integer(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned degree) {
  if (value < 0) {
    if (degree % 2 == 0) return std::nullopt;
    auto r = integer_root(-value, degree);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), degree) == 0) {
    return std::nullopt;
  }
  return root;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Scalar out(parse_integer(num), d);
  out.canonicalize();
  return out;
}

std::string format_rational(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar power(const Scalar& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw Error(ErrorCode::kDivisionByZero, "zero to a negative power");
    return power(Scalar(1) / value, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

std::optional<Scalar> rational_root(const Scalar& value, unsigned degree) {
  if (degree == 0) return std::nullopt;
  if (degree == 1) return value;
  auto num = integer_root(value.get_num(), degree);
  auto den = integer_root(value.get_den(), degree);
  if (!num || !den) return std::nullopt;
  Scalar out(*num, *den);
  out.canonicalize();
  return out;
}

}  // namespace pentagram
