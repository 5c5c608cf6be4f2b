#include "bel/normal_form.hpp"

#include <algorithm>
#include <string>

namespace bel {

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxNormalFormStrands) {
    throw BraidError("normal forms support 2.." + std::to_string(kMaxNormalFormStrands) +
                     " strands, got " + std::to_string(n));
  }
}

}  // namespace

// Works on (image, inverse image) pairs so that both descent sets are O(1).
class NormalFormBuilder {
 public:
  struct Factor {
    PermutationBraid perm;
    std::array<std::uint8_t, kMaxNormalFormStrands> inverse{};
  };

  static Factor make(const PermutationBraid& p) {
    Factor f{p, {}};
    for (int pos = 0; pos < p.strands_; ++pos) f.inverse[p.image_[pos]] = static_cast<std::uint8_t>(pos);
    return f;
  }

  // Makes (a, b) left-weighted by moving left descents of b onto a.
  // Returns true when anything moved.
  static bool left_weight(Factor& a, Factor& b, int n) {
    bool changed = false;
    for (int i = 1; i < n;) {
      const bool left_descent_b = b.inverse[i - 1] > b.inverse[i];
      const bool right_descent_a = a.perm.image_[i - 1] > a.perm.image_[i];
      if (left_descent_b && !right_descent_a) {
        // a <- a s_i
        std::swap(a.perm.image_[i - 1], a.perm.image_[i]);
        a.inverse[a.perm.image_[i - 1]] = static_cast<std::uint8_t>(i - 1);
        a.inverse[a.perm.image_[i]] = static_cast<std::uint8_t>(i);
        // b <- s_i^-1 b
        const int p = b.inverse[i - 1], q = b.inverse[i];
        std::swap(b.perm.image_[p], b.perm.image_[q]);
        std::swap(b.inverse[i - 1], b.inverse[i]);
        changed = true;
        i = std::max(1, i - 1);
      } else {
        ++i;
      }
    }
    return changed;
  }

  explicit NormalFormBuilder(int n) : n_(n) {}

  void append(const PermutationBraid& p) {
    factors_.push_back(make(p));
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (!left_weight(factors_[j - 1], factors_[j], n_)) break;
    }
    // Delta factors collect at the front, trivial ones at the back.
    std::size_t leading = 0;
    while (leading < factors_.size() && factors_[leading].perm.is_delta()) ++leading;
    if (leading) {
      inf_ += static_cast<int>(leading);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
    }
    while (!factors_.empty() && factors_.back().perm.is_identity()) factors_.pop_back();
  }

  NormalForm finish(int inf_offset) const {
    NormalForm nf;
    nf.strands = n_;
    nf.inf = inf_ + inf_offset;
    nf.factors.reserve(factors_.size());
    for (const auto& f : factors_) nf.factors.push_back(f.perm);
    return nf;
  }

 private:
  int n_;
  int inf_ = 0;
  std::vector<Factor> factors_;
};

PermutationBraid PermutationBraid::identity(int strands) {
  check_strands(strands);
  PermutationBraid p(strands);
  for (int i = 0; i < strands; ++i) p.image_[i] = static_cast<std::uint8_t>(i);
  return p;
}

PermutationBraid PermutationBraid::delta(int strands) {
  check_strands(strands);
  PermutationBraid p(strands);
  for (int i = 0; i < strands; ++i) p.image_[i] = static_cast<std::uint8_t>(strands - 1 - i);
  return p;
}

PermutationBraid PermutationBraid::generator(int strands, int index) {
  auto p = identity(strands);
  if (index < 1 || index >= strands) throw BraidError("generator index out of range");
  std::swap(p.image_[index - 1], p.image_[index]);
  return p;
}

PermutationBraid PermutationBraid::delta_over_generator(int strands, int index) {
  auto p = delta(strands);
  if (index < 1 || index >= strands) throw BraidError("generator index out of range");
  std::swap(p.image_[index - 1], p.image_[index]);
  return p;
}

PermutationBraid PermutationBraid::from_image(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  check_strands(n);
  PermutationBraid p(n);
  std::vector<bool> seen(image.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = image[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw BraidError("not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.image_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

std::vector<int> PermutationBraid::image() const {
  return std::vector<int>(image_.begin(), image_.begin() + strands_);
}

bool PermutationBraid::is_identity() const {
  for (int i = 0; i < strands_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

bool PermutationBraid::is_delta() const {
  for (int i = 0; i < strands_; ++i) {
    if (image_[i] != strands_ - 1 - i) return false;
  }
  return true;
}

BraidWord PermutationBraid::to_word() const {
  auto f = NormalFormBuilder::make(*this);
  std::vector<Letter> out;
  for (;;) {
    int i = 1;
    while (i < strands_ && !(f.inverse[i - 1] > f.inverse[i])) ++i;
    if (i == strands_) break;
    out.emplace_back(i);
    const int p = f.inverse[i - 1], q = f.inverse[i];
    std::swap(f.perm.image_[p], f.perm.image_[q]);
    std::swap(f.inverse[i - 1], f.inverse[i]);
  }
  return BraidWord(strands_, std::move(out));
}

PermutationBraid PermutationBraid::flipped() const {
  PermutationBraid p(strands_);
  for (int i = 0; i < strands_; ++i) {
    p.image_[i] = static_cast<std::uint8_t>(strands_ - 1 - image_[strands_ - 1 - i]);
  }
  return p;
}

PermutationBraid PermutationBraid::right_complement() const {
  // A * dA = Delta, composing images left to right.
  std::array<std::uint8_t, kMaxNormalFormStrands> inverse{};
  for (int pos = 0; pos < strands_; ++pos) inverse[image_[pos]] = static_cast<std::uint8_t>(pos);
  PermutationBraid p(strands_);
  for (int pos = 0; pos < strands_; ++pos) p.image_[pos] = inverse[strands_ - 1 - pos];
  return p;
}

std::vector<bool> PermutationBraid::letter_set() const {
  // s_i occurs iff some strand crosses between positions i-1 and i, i.e. the
  // first i positions are not permuted among themselves.
  std::vector<bool> used(static_cast<std::size_t>(strands_), false);
  int running_max = -1;
  for (int i = 1; i < strands_; ++i) {
    running_max = std::max(running_max, static_cast<int>(image_[i - 1]));
    used[static_cast<std::size_t>(i)] = running_max != i - 1;
  }
  return used;
}

bool operator==(const PermutationBraid& a, const PermutationBraid& b) {
  return a.strands_ == b.strands_ &&
         std::equal(a.image_.begin(), a.image_.begin() + a.strands_, b.image_.begin());
}

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  check_strands(n);
  // w = Delta^-r * prod tau^{c_j}(y_j), where each s_i^-1 is Delta^-1 (Delta s_i^-1)
  // and c_j counts the inverse letters to the right of position j.
  const auto letters = w.letters();
  std::vector<bool> flip(letters.size());
  int negatives = 0;
  for (std::size_t k = letters.size(); k-- > 0;) {
    flip[k] = (negatives % 2) != 0;
    if (letters[k].sign() < 0) ++negatives;
  }

  NormalFormBuilder builder(n);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    int index = letters[k].index();
    if (flip[k]) index = n - index;
    builder.append(letters[k].sign() > 0 ? PermutationBraid::generator(n, index)
                                         : PermutationBraid::delta_over_generator(n, index));
  }
  return builder.finish(-negatives);
}

BraidWord nf_to_word(const NormalForm& nf) {
  std::vector<Letter> out;
  const BraidWord delta = delta_power(nf.strands, nf.inf);
  out.insert(out.end(), delta.letters().begin(), delta.letters().end());
  for (const auto& f : nf.factors) {
    const BraidWord piece = f.to_word();
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return BraidWord(nf.strands, std::move(out));
}

int delta_squared_quotient(const NormalForm& nf) {
  const int r = ((nf.inf % 2) + 2) % 2;
  return (nf.inf - r) / 2;
}

NormalForm reduce_mod_delta_squared(const NormalForm& nf) {
  NormalForm out = nf;
  out.inf = nf.inf - 2 * delta_squared_quotient(nf);
  return out;
}

bool equal_in_braid_group(const BraidWord& u, const BraidWord& w) {
  require_same_strands(u, w);
  return left_normal_form(u) == left_normal_form(w);
}

std::vector<int> element_support(const NormalForm& nf) {
  const int n = nf.strands;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto absorb = [&](const std::vector<bool>& letters) {
    for (std::size_t i = 1; i < letters.size(); ++i) used[i] = used[i] || letters[i];
  };
  auto everything = [&] {
    for (int i = 1; i < n; ++i) used[static_cast<std::size_t>(i)] = true;
  };

  const auto k = static_cast<int>(nf.factors.size());
  if (nf.inf > 0) everything();
  if (nf.inf >= 0) {
    for (const auto& f : nf.factors) absorb(f.letter_set());
  } else {
    // Delta^-m A_1..A_k = (dA_m tau(dA_{m-1}) ... tau^{m-1}(dA_1) Delta^{m-k})^-1 A_{m+1}..A_k
    const int m = -nf.inf;
    if (m > k) everything();
    for (int j = 0; j < k; ++j) {
      const auto& f = nf.factors[static_cast<std::size_t>(j)];
      if (j < m) {
        PermutationBraid c = f.right_complement();
        if ((m - 1 - j) % 2) c = c.flipped();
        absorb(c.letter_set());
      } else {
        absorb(f.letter_set());
      }
    }
  }
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

std::vector<int> element_support(const BraidWord& w) { return element_support(left_normal_form(w)); }

bool is_left_weighted(const NormalForm& nf) {
  for (const auto& f : nf.factors) {
    if (f.is_identity() || f.is_delta()) return false;
  }
  for (std::size_t j = 1; j < nf.factors.size(); ++j) {
    auto a = NormalFormBuilder::make(nf.factors[j - 1]);
    auto b = NormalFormBuilder::make(nf.factors[j]);
    if (NormalFormBuilder::left_weight(a, b, nf.strands)) return false;
  }
  return true;
}

}  // namespace bel
