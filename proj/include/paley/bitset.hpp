#ifndef PALEY_BITSET_HPP
#define PALEY_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace paley {

// Fixed-width bit vector padded to 64-bit words. Adjacency rows and the
// candidate/excluded sets of the clique search operate on these directly;
// padding bits are kept zero so popcounts and word compares are exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // *this &= ~o
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  static int and_count(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Index of the first set bit, or -1.
  int find_first() const { return find_from(0); }

  // Index of the first set bit strictly after i, or -1.
  int find_next(int i) const { return find_from(i + 1); }

  const std::vector<std::uint64_t>& words() const { return w_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int find_from(int i) const {
    if (i >= nbits_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = w_[k] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++k; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k << 6) + std::countr_zero(w_[k]);
    return -1;
  }

  void trim() {
    if (nbits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace paley

#endif  // PALEY_BITSET_HPP
