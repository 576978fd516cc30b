#include "hcbim/rational.hpp"

#include <cctype>
#include <cmath>

#include "hcbim/error.hpp"

namespace hcbim {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::NeedMoreOrders: return "NeedMoreOrders";
    case ErrorCode::NotPureExponential: return "NotPureExponential";
    case ErrorCode::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorCode::RankExceedsBound: return "RankExceedsBound";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NonGenericWeight: return "NonGenericWeight";
    case ErrorCode::RankMismatch: return "RankMismatch";
  }
  return "Unknown";
}

std::string to_string(const Rational& x) { return x.get_str(10); }

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false)) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Complex to_complex(const Rational& x) { return Complex(x.get_d(), 0.0); }

bool approx_equal(const Complex& a, const Complex& b, const Tolerance& tol) {
  return std::abs(a.real() - b.real()) <= tol.eps && std::abs(a.imag() - b.imag()) <= tol.eps;
}

std::vector<Integer> binomial_row(unsigned k) {
  std::vector<Integer> row(k + 1);
  row[0] = 1;
  for (unsigned j = 1; j <= k; ++j) {
    row[j] = row[j - 1] * (k - j + 1) / j;
  }
  return row;
}

}  // namespace hcbim
