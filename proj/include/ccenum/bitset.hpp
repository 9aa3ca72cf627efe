#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ccenum::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) noexcept {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool test(std::span<const Word> row, std::size_t i) noexcept {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t popcount(std::span<const Word> row) noexcept {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

/// Calls `f(index)` for every set bit in ascending order.
template <class F>
void for_each_set(std::span<const Word> row, F&& f) {
  for (std::size_t wi = 0; wi < row.size(); ++wi) {
    Word w = row[wi];
    while (w != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(w));
      f(wi * kWordBits + b);
      w &= w - 1;
    }
  }
}

}  // namespace ccenum::bits
