#include "bel/braid_word.hpp"

#include <charconv>
#include <sstream>

#include "bel/random.hpp"

namespace bel {

namespace {

void check_letters(int strands, std::span<const Letter> letters) {
  for (auto l : letters) {
    if (l.value() == 0 || l.index() >= strands) {
      throw BraidError("generator " + std::to_string(l.value()) + " out of range for B_" +
                       std::to_string(strands));
    }
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) throw BraidError("braid group needs at least 2 strands");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw BraidError("braid group needs at least 2 strands");
  check_letters(strands_, letters_);
}

BraidWord::BraidWord(int strands, std::initializer_list<int> signed_indices)
    : strands_(strands) {
  if (strands < 2) throw BraidError("braid group needs at least 2 strands");
  letters_.reserve(signed_indices.size());
  for (int v : signed_indices) letters_.emplace_back(v);
  check_letters(strands_, letters_);
}

bool BraidWord::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  }
  return true;
}

std::string BraidWord::to_string() const {
  std::string out = std::to_string(strands_) + ":[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i].value());
  }
  out += ']';
  return out;
}

BraidWord BraidWord::parse(std::string_view text) {
  auto fail = [&]() -> BraidError {
    return BraidError("malformed braid word '" + std::string(text) + "'");
  };
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  auto read_int = [&](std::size_t& i) {
    skip_ws(i);
    int value = 0;
    const char* first = text.data() + i;
    if (i < text.size() && text[i] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc()) throw fail();
    i = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  std::size_t i = 0;
  const int strands = read_int(i);
  skip_ws(i);
  if (i >= text.size() || text[i] != ':') throw fail();
  ++i;
  skip_ws(i);
  if (i >= text.size() || text[i] != '[') throw fail();
  ++i;
  std::vector<Letter> letters;
  skip_ws(i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      letters.emplace_back(read_int(i));
      skip_ws(i);
      if (i >= text.size()) throw fail();
      if (text[i] == ']') {
        ++i;
        break;
      }
      if (text[i] != ',') throw fail();
      ++i;
    }
  }
  skip_ws(i);
  if (i != text.size()) throw fail();
  return BraidWord(strands, std::move(letters));
}

BraidTuple::BraidTuple(std::vector<BraidWord> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw BraidError("braid tuple must be non-empty");
  for (const auto& w : entries_) {
    if (w.strands() != entries_.front().strands()) {
      throw BraidError("braid tuple entries must share a strand count");
    }
  }
}

void require_same_strands(const BraidWord& u, const BraidWord& w) {
  if (u.strands() != w.strands()) {
    throw BraidError("strand-count mismatch: B_" + std::to_string(u.strands()) + " vs B_" +
                     std::to_string(w.strands()));
  }
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w.letters()) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l = l.inverse();
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& u, const BraidWord& w) {
  require_same_strands(u, w);
  std::vector<Letter> out;
  out.reserve(u.size() + w.size());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

BraidWord product(const BraidWord& u, const BraidWord& w) { return free_reduce(concat(u, w)); }

BraidWord conjugate(const BraidWord& x, const BraidWord& g) {
  require_same_strands(x, g);
  return free_reduce(concat(concat(g, x), invert(g)));
}

BraidWord half_twist(int strands) {
  if (strands < 2) throw BraidError("half twist needs at least 2 strands");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(strands * (strands - 1) / 2));
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) out.emplace_back(i);
  }
  return BraidWord(strands, std::move(out));
}

BraidWord delta_power(int strands, int k) {
  const BraidWord delta = k >= 0 ? half_twist(strands) : invert(half_twist(strands));
  std::vector<Letter> out;
  const int reps = k >= 0 ? k : -k;
  out.reserve(delta.size() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    out.insert(out.end(), delta.letters().begin(), delta.letters().end());
  }
  return BraidWord(strands, std::move(out));
}

BraidWord delta_conjugate(const BraidWord& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  const int n = w.strands();
  for (auto& l : out) l = Letter(n - l.index(), l.sign());
  return BraidWord(n, std::move(out));
}

BraidWord random_freely_reduced(const RandomSpec& spec) {
  const int lo = spec.min_index > 0 ? spec.min_index : 1;
  const int hi = spec.max_index > 0 ? spec.max_index : spec.strands - 1;
  if (spec.strands < 2 || lo > hi || hi >= spec.strands) {
    throw BraidError("invalid generator range for random word");
  }
  const auto gens = static_cast<std::uint64_t>(hi - lo + 1);
  Rng rng(spec.seed);
  std::vector<Letter> out;
  out.reserve(spec.target_length);
  auto letter_at = [&](std::uint64_t k) {
    const int index = lo + static_cast<int>(k / 2);
    return Letter(index, (k % 2) ? -1 : 1);
  };
  for (std::size_t i = 0; i < spec.target_length; ++i) {
    if (out.empty()) {
      out.push_back(letter_at(rng.below(2 * gens)));
      continue;
    }
    // Draw among the 2g-1 letters that do not cancel the previous one.
    const Letter forbidden = out.back().inverse();
    std::uint64_t k = rng.below(2 * gens - 1);
    const std::uint64_t skip =
        2 * static_cast<std::uint64_t>(forbidden.index() - lo) + (forbidden.sign() < 0 ? 1 : 0);
    if (k >= skip) ++k;
    out.push_back(letter_at(k));
  }
  return BraidWord(spec.strands, std::move(out));
}

}  // namespace bel
