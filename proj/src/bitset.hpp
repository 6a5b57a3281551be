#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sylowkit::detail {

// Fixed-size bitset with value semantics, hashable.
class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t size() const { return bits_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r(a.bits_);
    for (std::size_t k = 0; k < a.words_.size(); ++k) r.words_[k] = a.words_[k] & b.words_[k];
    return r;
  }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace sylowkit::detail
