#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tangles {

// Fixed-length set of object indices stored as packed 64-bit words. Bits past
// size() are always zero, which the counting kernels rely on.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size, bool value = false);

  static BitVec from_bools(std::span<const std::uint8_t> values);
  static BitVec from_indices(std::size_t size, std::span<const std::size_t> indices);
  // Parses a string of '0'/'1' characters; position i is object i.
  static BitVec from_string(const std::string& bits);

  std::size_t size() const noexcept { return size_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  bool all() const noexcept { return count() == size_; }

  BitVec complement() const;
  bool is_subset_of(const BitVec& other) const noexcept;
  std::vector<std::size_t> indices() const;
  std::string to_string() const;

  BitVec& operator&=(const BitVec& other) noexcept;
  friend BitVec operator&(BitVec lhs, const BitVec& rhs) noexcept {
    lhs &= rhs;
    return lhs;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& lhs, const BitVec& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    return lhs.words_ <=> rhs.words_;
  }

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// |a ∩ b|; operands must have equal size.
inline std::size_t intersection_count(const BitVec& a, const BitVec& b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  return total;
}

// |a ∩ b ∩ c|; operands must have equal size.
inline std::size_t intersection_count(const BitVec& a, const BitVec& b,
                                      const BitVec& c) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i] & wc[i]));
  }
  return total;
}

// True iff |a ∩ b ∩ c| >= threshold; stops as soon as the answer is known.
inline bool intersection_at_least(const BitVec& a, const BitVec& b, const BitVec& c,
                                  std::size_t threshold) noexcept {
  if (threshold == 0) return true;
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i] & wc[i]));
    if (total >= threshold) return true;
  }
  return false;
}

}  // namespace tangles
