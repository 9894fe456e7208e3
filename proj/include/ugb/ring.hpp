#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ugb/error.hpp"

namespace ugb {

using Integer = boost::multiprecision::cpp_int;

enum class RingKind { Integers, IntegersMod, Rationals };

class RingElement;

/// A commutative ground ring with unity: Z, Z/nZ or Q.
class RingSpec {
public:
  static RingSpec integers();
  static RingSpec integers_mod(const Integer& modulus);
  static RingSpec rationals();

  /// Parses "Z", "Z/<n>" or "Q".
  static RingSpec parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }

  /// The modulus n for Z/n; zero for the other kinds.
  const Integer& modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(const Integer& value) const;

  /// num/den; only Q accepts a denominator other than one.
  RingElement from_fraction(const Integer& num, const Integer& den) const;

  /// Integers as optional-sign decimals, rationals as "p/q", residues
  /// reduced mod n.
  RingElement parse_element(std::string_view text) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
  RingSpec(RingKind kind, Integer modulus);

  RingKind kind_;
  Integer modulus_;
};

/// An immutable element of a RingSpec in canonical form: residues lie in
/// [0, n), fractions are reduced with a positive denominator.
class RingElement {
public:
  const RingSpec& ring() const noexcept { return ring_; }
  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  bool is_unit() const;

  /// Multiplicative inverse; throws Errc::NotAUnit.
  RingElement inverse() const;

  RingElement operator-() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  /// Throws Errc::RingMismatch when the rings differ.
  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string to_string() const;

private:
  friend class RingSpec;
  RingElement(RingSpec ring, Integer num, Integer den);

  RingSpec ring_;
  Integer num_;
  Integer den_;
};

inline RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }
inline bool is_unit(const RingElement& a) { return a.is_unit(); }
inline RingElement inv_unit(const RingElement& a) { return a.inverse(); }

} // namespace ugb
