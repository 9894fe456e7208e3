#include "ugb/word.hpp"

#include <algorithm>
#include <set>

#include "ugb/error.hpp"

namespace ugb {

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ w.size();
  for (Letter l : w) {
    h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty())
      throw Error(Errc::InvalidArgument, "alphabet symbols must be nonempty");
    if (!seen.insert(name).second)
      throw Error(Errc::InvalidArgument, "duplicate alphabet symbol '" + name + "'");
  }
}

Alphabet Alphabet::indexed(std::size_t size, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 1; i <= size; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<Letter>(it - names_.begin());
}

std::strong_ordering compare(const OrderSpec& order, const Word& a, const Word& b) {
  switch (order.kind) {
  case OrderKind::DegLex:
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }
  return std::strong_ordering::equal;
}

std::vector<Placement> factorizations(const Word& needle, const Word& haystack) {
  std::vector<Placement> out;
  if (needle.size() > haystack.size())
    return out;
  const auto n = needle.size();
  for (std::size_t i = 0; i + n <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back({haystack.slice(0, i), haystack.slice(i + n, haystack.size() - i - n)});
  }
  return out;
}

bool is_factor(const Word& needle, const Word& haystack) {
  if (needle.empty())
    return true;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

namespace {

bool suffix_equals_prefix(const Word& a, const Word& b, std::size_t k) {
  return std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin());
}

// a = p*s, b = s*q with |s| = k; ambiguity p*s*q.
void proper_overlaps(const Word& a, const Word& b, bool a_is_first, std::vector<Overlap>& out) {
  const auto limit = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < limit; ++k) {
    if (!suffix_equals_prefix(a, b, k))
      continue;
    Word p = a.slice(0, a.size() - k);
    Word q = b.slice(k, b.size() - k);
    Overlap o;
    o.kind = OverlapKind::Proper;
    o.ambiguity = a * q;
    Placement on_a{Word{}, q};
    Placement on_b{std::move(p), Word{}};
    if (a_is_first) {
      o.first = std::move(on_a);
      o.second = std::move(on_b);
    } else {
      o.first = std::move(on_b);
      o.second = std::move(on_a);
    }
    out.push_back(std::move(o));
  }
}

} // namespace

std::vector<Overlap> overlaps(const Word& w, const Word& w2, Pairing pairing) {
  if (w.empty() || w2.empty())
    throw Error(Errc::EmptyWord, "overlaps are defined for nonempty words only");

  std::vector<Overlap> out;
  const bool self = pairing == Pairing::Self;
  if (self && !(w == w2))
    throw Error(Errc::InvalidArgument, "a self pairing needs equal words");
  proper_overlaps(w, w2, true, out);
  if (!self) {
    proper_overlaps(w2, w, false, out);
    for (auto& p : factorizations(w2, w))
      out.push_back({Placement{}, std::move(p), w, OverlapKind::Inclusion});
    for (auto& p : factorizations(w, w2))
      out.push_back({std::move(p), Placement{}, w2, OverlapKind::Inclusion});
  }

  std::vector<Overlap> unique;
  for (auto& o : out) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Overlap& u) {
      return u.first == o.first && u.second == o.second;
    });
    if (!seen)
      unique.push_back(std::move(o));
  }
  return unique;
}

} // namespace ugb
