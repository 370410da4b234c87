#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>

namespace tricode {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t n_bits) {
  return (n_bits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(const word_t* words, std::size_t i) {
  return (words[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(word_t* words, std::size_t i, bool v) {
  const word_t mask = word_t{1} << (i % kWordBits);
  if (v) {
    words[i / kWordBits] |= mask;
  } else {
    words[i / kWordBits] &= ~mask;
  }
}

inline void flip_bit(word_t* words, std::size_t i) {
  words[i / kWordBits] ^= word_t{1} << (i % kWordBits);
}

// Parity (mod 2) of popcount over a word range.
inline bool parity(std::span<const word_t> words) {
  word_t acc = 0;
  for (word_t w : words) {
    acc ^= w;
  }
  return std::popcount(acc) & 1u;
}

inline int popcount_span(std::span<const word_t> words) {
  int n = 0;
  for (word_t w : words) {
    n += std::popcount(w);
  }
  return n;
}

}  // namespace tricode
