#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cliffsym {

// Packed bit vector. Bits past size() are kept at zero so whole-word
// comparisons and popcounts stay valid.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }

  bool get(size_t i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(size_t i, bool v) {
    check(i);
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) {
    check(i);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    require_same(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  BitVec& operator&=(const BitVec& o) {
    require_same(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // Complements every bit in [0, size).
  void flip_all() {
    for (auto& w : w_) w = ~w;
    mask_tail();
  }

  size_t count() const {
    size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_) {
      if (w) return true;
    }
    return false;
  }

  bool operator==(const BitVec&) const = default;

  std::span<const uint64_t> words() const { return w_; }
  uint64_t word(size_t i) const { return w_[i]; }
  void set_word(size_t i, uint64_t v) {
    w_[i] = v;
    if (i + 1 == w_.size()) mask_tail();
  }

  // Byte b covers bits [8b, 8b+8); reads past size() return zero.
  uint8_t get_byte(size_t b) const {
    size_t wi = b >> 3;
    if (wi >= w_.size()) return 0;
    return static_cast<uint8_t>(w_[wi] >> ((b & 7) * 8));
  }

  void xor_byte(size_t b, uint8_t v) {
    size_t wi = b >> 3;
    if (wi >= w_.size()) throw std::out_of_range("BitVec byte index");
    w_[wi] ^= uint64_t{v} << ((b & 7) * 8);
    if (wi + 1 == w_.size()) mask_tail();
  }

 private:
  void check(size_t i) const {
    if (i >= n_) throw std::out_of_range("BitVec index");
  }
  void require_same(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec size mismatch");
  }
  void mask_tail() {
    if (n_ % 64 != 0 && !w_.empty()) {
      w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cliffsym
