#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bel {

/// Raised for contract violations on braid values: strand-count mismatches,
/// out-of-range generators, malformed serializations, exhausted step caps.
class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An Artin generator s_i or its inverse, stored as the signed integer
/// +i / -i.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int signed_index) : value_(static_cast<std::int16_t>(signed_index)) {}
  constexpr Letter(int index, int sign)
      : value_(static_cast<std::int16_t>(sign < 0 ? -index : index)) {}

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int value() const { return value_; }
  constexpr Letter inverse() const { return Letter(-value_); }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int16_t value_ = 0;
};

/// A word in the Artin generators of B_n.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);
  BraidWord(int strands, std::initializer_list<int> signed_indices);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// True when no adjacent pair s_i^e s_i^-e occurs.
  bool is_freely_reduced() const;

  /// Compact text form `n:[1,-3,2]`.
  std::string to_string() const;
  static BraidWord parse(std::string_view text);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// An ordered, non-empty list of words over a common B_n.
class BraidTuple {
 public:
  explicit BraidTuple(std::vector<BraidWord> entries);

  int strands() const { return entries_.front().strands(); }
  std::size_t size() const { return entries_.size(); }
  const BraidWord& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const BraidWord> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const BraidTuple&, const BraidTuple&) = default;

 private:
  std::vector<BraidWord> entries_;
};

struct RandomSpec {
  int strands = 2;
  std::size_t target_length = 1;
  std::uint64_t seed = 0;
  // Inclusive generator range; 0 means "all of 1..n-1".
  int min_index = 0;
  int max_index = 0;
};

BraidWord free_reduce(const BraidWord& w);
BraidWord invert(const BraidWord& w);
BraidWord product(const BraidWord& u, const BraidWord& w);
/// g x g^-1, freely reduced.
BraidWord conjugate(const BraidWord& x, const BraidWord& g);
/// Delta = (s_1...s_{n-1})(s_1...s_{n-2})...(s_1 s_2)s_1.
BraidWord half_twist(int strands);
/// Delta^k as |k| copies of the half-twist word (inverted when k < 0).
BraidWord delta_power(int strands, int k);
/// Delta^-1 w Delta: every s_j becomes s_{n-j}.
BraidWord delta_conjugate(const BraidWord& w);
/// Concatenation without free reduction.
BraidWord concat(const BraidWord& u, const BraidWord& w);

/// Uniform walk over the signed generators that never steps back along the
/// previous letter.
BraidWord random_freely_reduced(const RandomSpec& spec);

void require_same_strands(const BraidWord& u, const BraidWord& w);

}  // namespace bel
