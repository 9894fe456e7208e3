#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ugb {

/// Index of a generator; the generator order is the index order.
using Letter = std::uint32_t;

/// A finite sequence of letters, i.e. the monomial x^alpha. The empty word
/// is the monomial 1.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word slice(std::size_t pos, std::size_t len) const;

  /// Concatenation.
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Symbol names for the generators, in ascending generator order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// x1, x2, ..., xn.
  static Alphabet indexed(std::size_t size, std::string_view prefix = "x");

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

enum class OrderKind { DegLex };

/// The admissible monomial ordering in use. Only DegLex ships.
struct OrderSpec {
  OrderKind kind = OrderKind::DegLex;
  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

std::strong_ordering compare(const OrderSpec& order, const Word& a, const Word& b);

/// Context words around an occurrence: left * needle * right.
struct Placement {
  Word left;
  Word right;
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Every occurrence of `needle` as a contiguous factor of `haystack`, left
/// to right. The empty needle occurs |haystack| + 1 times.
std::vector<Placement> factorizations(const Word& needle, const Word& haystack);

bool is_factor(const Word& needle, const Word& haystack);

enum class OverlapKind { Proper, Inclusion, Lcm };

/// An ambiguity word realised two ways:
///   first.left * w * first.right == second.left * w2 * second.right == ambiguity
struct Overlap {
  Placement first;
  Placement second;
  Word ambiguity;
  OverlapKind kind = OverlapKind::Proper;
};

/// Whether the two words belong to one generator or to two different ones.
enum class Pairing { Distinct, Self };

/// Proper overlaps in both directions and inclusions in both directions of
/// two nonempty words. Disjoint placements are never produced. Under
/// Pairing::Self (w paired with itself) the mirrored duplicates and the
/// trivial self-inclusion are dropped. Throws Errc::EmptyWord.
std::vector<Overlap> overlaps(const Word& w, const Word& w2, Pairing pairing = Pairing::Distinct);

} // namespace ugb
