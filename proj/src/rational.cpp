#include "cubeforge/rational.hpp"

#include "cubeforge/errors.hpp"

namespace cubeforge {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw DomainError("malformed rational '" + std::string(whole) + "' (expected p/q)");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), BigInt(1));
  }
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

double Rational::to_double() const {
  boost::multiprecision::cpp_rational r(num_, den_);
  return r.convert_to<double>();
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) {
    q -= 1;
  }
  return q;
}

Rational Rational::pow(unsigned exponent) const {
  return Rational(boost::multiprecision::pow(num_, exponent), boost::multiprecision::pow(den_, exponent));
}

}  // namespace cubeforge
