#include "tangles/bitvec.hpp"

#include "tangles/error.hpp"

namespace tangles {

namespace {

std::size_t word_count(std::size_t size) { return (size + BitVec::kWordBits - 1) / BitVec::kWordBits; }

}  // namespace

BitVec::BitVec(std::size_t size, bool value)
    : size_(size), words_(word_count(size), value ? ~Word{0} : Word{0}) {
  clear_tail();
}

BitVec BitVec::from_bools(std::span<const std::uint8_t> values) {
  BitVec bits(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) bits.set(i);
  }
  return bits;
}

BitVec BitVec::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVec bits(size);
  for (std::size_t i : indices) {
    if (i >= size) {
      throw Error(ErrorCode::kLengthMismatch,
                  "index " + std::to_string(i) + " outside universe of " + std::to_string(size));
    }
    bits.set(i);
  }
  return bits;
}

BitVec BitVec::from_string(const std::string& text) {
  BitVec bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits.set(i);
    } else if (text[i] != '0') {
      throw Error(ErrorCode::kParse, "bit string may only contain 0 and 1: " + text);
    }
  }
  return bits;
}

std::size_t BitVec::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitVec BitVec::complement() const {
  BitVec out = *this;
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

bool BitVec::is_subset_of(const BitVec& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

BitVec& BitVec::operator&=(const BitVec& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void BitVec::clear_tail() noexcept {
  const std::size_t used = size_ % kWordBits;
  if (used != 0 && !words_.empty()) words_.back() &= (Word{1} << used) - 1;
}

}  // namespace tangles
