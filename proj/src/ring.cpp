#include "ugb/ring.hpp"

#include <cctype>
#include <utility>

namespace ugb {
namespace {

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0)
    r += n;
  return r;
}

// Returns (g, s) with g = gcd(a, n) and s*a = g (mod n).
std::pair<Integer, Integer> gcd_with_cofactor(const Integer& a, const Integer& n) {
  Integer old_r = a, r = n;
  Integer old_s = 1, s = 0;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer next = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next);
    next = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
  }
  return {old_r, old_s};
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw Error(Errc::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw Error(Errc::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Integer(-value) : value;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring()))
    throw Error(Errc::RingMismatch,
                "cannot combine elements of " + a.ring().to_string() + " and " + b.ring().to_string());
}

} // namespace

RingSpec::RingSpec(RingKind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

RingSpec RingSpec::integers() { return RingSpec(RingKind::Integers, 0); }

RingSpec RingSpec::integers_mod(const Integer& modulus) {
  if (modulus < 2)
    throw Error(Errc::InvalidArgument, "modulus must be at least 2, got " + modulus.str());
  return RingSpec(RingKind::IntegersMod, modulus);
}

RingSpec RingSpec::rationals() { return RingSpec(RingKind::Rationals, 0); }

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z")
    return integers();
  if (text == "Q")
    return rationals();
  if (text.starts_with("Z/"))
    return integers_mod(parse_integer(text.substr(2)));
  throw Error(Errc::InvalidArgument, "unknown ring '" + std::string(text) + "' (expected Z, Z/<n> or Q)");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
  case RingKind::Integers: return "Z";
  case RingKind::Rationals: return "Q";
  case RingKind::IntegersMod: return "Z/" + modulus_.str();
  }
  return "?";
}

RingElement RingSpec::zero() const { return RingElement(*this, 0, 1); }
RingElement RingSpec::one() const { return RingElement(*this, 1, 1); }
RingElement RingSpec::from_integer(const Integer& value) const { return RingElement(*this, value, 1); }

RingElement RingSpec::from_fraction(const Integer& num, const Integer& den) const {
  if (den.is_zero())
    throw Error(Errc::InvalidArgument, "zero denominator");
  if (kind_ != RingKind::Rationals && den != 1 && den != -1)
    throw Error(Errc::InvalidArgument, "fractions are only available over Q");
  return RingElement(*this, num, den);
}

RingElement RingSpec::parse_element(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return from_integer(parse_integer(text));
  return from_fraction(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

RingElement::RingElement(RingSpec ring, Integer num, Integer den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
  switch (ring_.kind()) {
  case RingKind::Integers:
    break;
  case RingKind::IntegersMod:
    num_ = floor_mod(num_, ring_.modulus());
    break;
  case RingKind::Rationals: {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_.is_zero())
      den_ = 1;
    break;
  }
  }
}

bool RingElement::is_unit() const {
  switch (ring_.kind()) {
  case RingKind::Integers: return num_ == 1 || num_ == -1;
  case RingKind::Rationals: return !num_.is_zero();
  case RingKind::IntegersMod: return boost::multiprecision::gcd(num_, ring_.modulus()) == 1;
  }
  return false;
}

RingElement RingElement::inverse() const {
  if (!is_unit())
    throw Error(Errc::NotAUnit, to_string() + " is not a unit of " + ring_.to_string());
  switch (ring_.kind()) {
  case RingKind::Integers: return *this;
  case RingKind::Rationals: return RingElement(ring_, den_, num_);
  case RingKind::IntegersMod: return RingElement(ring_, gcd_with_cofactor(num_, ring_.modulus()).second, 1);
  }
  return *this;
}

RingElement RingElement::operator-() const { return RingElement(ring_, -num_, den_); }

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  if (a.den_ == 1 && b.den_ == 1)
    return RingElement(a.ring_, a.num_ + b.num_, 1);
  return RingElement(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RingElement::to_string() const {
  if (den_ == 1)
    return num_.str();
  return num_.str() + "/" + den_.str();
}

} // namespace ugb
