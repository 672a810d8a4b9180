#include "cayley_ricci/rational.hpp"

#include <cctype>
#include <ostream>

#include "cayley_ricci/error.hpp"

namespace ricci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonSymmetricSet: return "NonSymmetricSet";
    case ErrorCode::ContainsIdentity: return "ContainsIdentity";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::UnbalancedMeasures: return "UnbalancedMeasures";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::MarginalMismatch: return "MarginalMismatch";
    case ErrorCode::NotLipschitz: return "NotLipschitz";
    case ErrorCode::UndefinedPotential: return "UndefinedPotential";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::StabilizationFailure: return "StabilizationFailure";
    case ErrorCode::NotInTable: return "NotInTable";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  r.value_ = std::move(value);
  return r;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  return from_mpq(std::move(q));
}

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return from_mpq(-value_); }

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace ricci
