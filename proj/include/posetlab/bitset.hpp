#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace posetlab {

// Fixed-width bit vector sized at construction. Rows of the poset relation
// tables are stored as these, so the hot loops below are all word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // this \ o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  void fill_all() {
    if (n_ == 0) return;
    std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
    trim();
  }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const = default;

  // Least set index >= from, or -1.
  int next(int from) const {
    if (from >= n_) return -1;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    std::uint64_t cur = w_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) {
        int i = static_cast<int>(k * 64) + std::countr_zero(cur);
        return i < n_ ? i : -1;
      }
      if (++k >= w_.size()) return -1;
      cur = w_[k];
    }
  }

  // Greatest set index, or -1.
  int max_set() const {
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return static_cast<int>(k * 64) + 63 - std::countl_zero(w_[k]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    int r = n_ & 63;
    if (r != 0 && !w_.empty()) w_.back() &= (~std::uint64_t{0} >> (64 - r));
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace posetlab
