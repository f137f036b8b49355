#include "modspace/exponent.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "modspace/errors.hpp"

namespace modspace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected an integer", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in rational", offset + i);
    }
  }
  return boost::multiprecision::cpp_int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
    offset = 1;
  }
  const auto slash = text.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(parse_integer(text, offset));
  } else {
    auto num = parse_integer(text.substr(0, slash), offset);
    auto den = parse_integer(text.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    out = Rational(num, den);
  }
  return negative ? Rational(-out) : out;
}

Exponent::Exponent(Rational value) : value_(std::move(value)) {
  if (*value_ <= 0) throw std::domain_error("exponent must be positive, got " + to_string(*value_));
}

Exponent::Exponent(std::int64_t num, std::int64_t den) : Exponent(Rational(num, den)) {}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  Rational r = parse_rational(text);
  if (r <= 0) throw ParseError("exponent must be positive", 0);
  return Exponent(std::move(r));
}

const Rational& Exponent::value() const {
  if (!value_) throw std::logic_error("value() of an infinite exponent");
  return *value_;
}

Rational Exponent::reciprocal() const {
  if (!value_) return Rational(0);
  return Rational(1) / *value_;
}

Exponent Exponent::dual() const {
  if (!value_) return Exponent(1);
  if (*value_ <= 1) return infinity();
  return Exponent(Rational(1) / (Rational(1) - Rational(1) / *value_));
}

double Exponent::to_double() const {
  return value_ ? modspace::to_double(*value_) : std::numeric_limits<double>::infinity();
}

std::string Exponent::str() const { return value_ ? to_string(*value_) : std::string("inf"); }

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*b.value_ < *a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view to_string(IndexPiece piece) {
  switch (piece) {
    case IndexPiece::ZeroPiece: return "zero";
    case IndexPiece::QminusP: return "q-p";
    case IndexPiece::PplusQminus1: return "p+q-1";
  }
  return "?";
}

Rational reciprocal(const Exponent& p) { return p.reciprocal(); }
Exponent dual(const Exponent& p) { return p.dual(); }

void require_dimension(int d) {
  if (d < 1) throw std::domain_error("dimension must be >= 1, got " + std::to_string(d));
}

namespace {

// The three affine pieces shared by tau and sigma, in tie-break order.
std::array<Rational, 3> pieces(const Exponent& p, const Exponent& q) {
  const Rational ip = p.reciprocal();
  const Rational iq = q.reciprocal();
  return {Rational(0), iq - ip, iq + ip - 1};
}

IndexPiece first_attaining(const std::array<Rational, 3>& v, const Rational& target) {
  if (v[0] == target) return IndexPiece::ZeroPiece;
  if (v[1] == target) return IndexPiece::QminusP;
  return IndexPiece::PplusQminus1;
}

}  // namespace

Rational tau(const Exponent& p, const Exponent& q, int d) {
  require_dimension(d);
  const auto v = pieces(p, q);
  return d * max_of(v[0], max_of(v[1], v[2]));
}

Rational sigma(const Exponent& p, const Exponent& q, int d) {
  require_dimension(d);
  const auto v = pieces(p, q);
  return d * min_of(v[0], min_of(v[1], v[2]));
}

IndexPiece tau_region(const Exponent& p0, const Exponent& q) {
  const auto v = pieces(p0, q);
  return first_attaining(v, max_of(v[0], max_of(v[1], v[2])));
}

IndexPiece sigma_region(const Exponent& p1, const Exponent& q) {
  const auto v = pieces(p1, q);
  return first_attaining(v, min_of(v[0], min_of(v[1], v[2])));
}

}  // namespace modspace
