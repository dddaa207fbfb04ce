#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cliffsym/bitvec.hpp"

namespace cliffsym {

// One 512x512-bit block, stored as a 512x64 grid of bytes in column-major
// order. Each byte is a 1x8 row segment: bit k of the byte holds logical
// column (byte_column*8 + k), LSB first. Equivalently, the 64-bit word at
// index J*64 + I is the 8x8 bit block covering rows [8I, 8I+8) and columns
// [8J, 8J+8), with bit (8r + c) inside the word.
struct alignas(64) Tile {
  static constexpr size_t kBits = 512;
  static constexpr size_t kWordsPerSegment = 64;  // 512 bits of one lane group
  static constexpr size_t kWords = kBits * kBits / 64;

  std::array<uint64_t, kWords> words;

  void fill_zero() { words.fill(0); }
};

// Which way the tiles are currently stored. ColumnMajor is the layout above
// (fast column access); RowMajor means every tile holds the transpose of its
// logical block, which makes 512-bit row segments contiguous instead.
enum class TileOrder : uint8_t { kColumnMajor, kRowMajor };

// Bit mask selecting lane 0 (bit 0 of every byte) of a word.
inline constexpr uint64_t kLaneMask = 0x0101010101010101ull;

// Compresses the eight lane-0 bits of `w` (positions 0,8,...,56) into a byte.
inline uint8_t gather_lane0(uint64_t w) {
  return static_cast<uint8_t>(((w & kLaneMask) * 0x0102040810204080ull) >> 56);
}

// Inverse of gather_lane0: spreads the bits of `b` to positions 0,8,...,56.
inline uint64_t scatter_lane0(uint8_t b) {
  uint64_t x = b;
  x = (x | (x << 28)) & 0x0000000F0000000Full;
  x = (x | (x << 14)) & 0x0003000300030003ull;
  x = (x | (x << 7)) & kLaneMask;
  return x;
}

// Transposes an 8x8 bit matrix packed as bit (8r + c).
inline uint64_t transpose8x8(uint64_t x) {
  uint64_t t;
  t = (x ^ (x >> 7)) & 0x00AA00AA00AA00AAull;
  x ^= t ^ (t << 7);
  t = (x ^ (x >> 14)) & 0x0000CCCC0000CCCCull;
  x ^= t ^ (t << 14);
  t = (x ^ (x >> 28)) & 0x00000000F0F0F0F0ull;
  x ^= t ^ (t << 28);
  return x;
}

// A 2D bit matrix stored as a grid of 512x512-bit tiles. Edge tiles are
// zero-padded; every operation preserves the padding. The orientation flag
// says whether tiles are locally transposed; get_bit/set_bit are orientation
// independent, while column kernels require ColumnMajor and row kernels
// RowMajor (callers flip with local_transpose).
class TiledBitMatrix {
 public:
  TiledBitMatrix() = default;
  TiledBitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t tile_rows() const { return tile_rows_; }
  size_t tile_cols() const { return tile_cols_; }
  TileOrder order() const { return order_; }

  bool get_bit(size_t r, size_t c) const;
  void set_bit(size_t r, size_t c, bool v);
  void flip_bit(size_t r, size_t c);

  // Column kernels (ColumnMajor only).
  void column_op_xor(size_t dst_col, size_t src_col);
  void column_swap(size_t a, size_t b);
  BitVec column_bits(size_t c) const;
  BitVec column_select_and(size_t a, size_t b) const;
  void column_xor_bits(size_t dst_col, const BitVec& v);

  // Row kernels (RowMajor only). Rows span all logical columns.
  void row_op_xor(size_t dst_row, size_t src_row);
  void row_xor_from(size_t dst_row, const TiledBitMatrix& src, size_t src_row);
  void row_copy(size_t dst_row, size_t src_row);
  void row_clear(size_t r);
  BitVec row_bits(size_t r) const;

  // Transposes every tile in place and flips the orientation flag. Logical
  // content is unchanged; applying it twice restores the exact storage.
  void local_transpose();
  void ensure_order(TileOrder want);

  // Raw 64-word segment of one lane group. In ColumnMajor, segment_ptr with a
  // column index gives the words holding that column (lane = col % 8, word i
  // covers rows [8i, 8i+8) of the tile). In RowMajor the roles are swapped.
  uint64_t* column_segment(size_t tile_row, size_t col);
  const uint64_t* column_segment(size_t tile_row, size_t col) const;
  uint64_t* row_segment(size_t row, size_t tile_col);
  const uint64_t* row_segment(size_t row, size_t tile_col) const;

  const Tile& tile(size_t tr, size_t tc) const { return tiles_[tr * tile_cols_ + tc]; }
  Tile& tile(size_t tr, size_t tc) { return tiles_[tr * tile_cols_ + tc]; }

  // Logical equality irrespective of orientation. Intended for tests.
  bool same_bits(const TiledBitMatrix& o) const;

  // One '0'/'1' line per row; test-fixture format.
  std::string to_text() const;

 private:
  void check_rc(size_t r, size_t c) const;

  size_t rows_ = 0, cols_ = 0;
  size_t tile_rows_ = 0, tile_cols_ = 0;
  TileOrder order_ = TileOrder::kColumnMajor;
  std::vector<Tile> tiles_;
};

// Dense GF(2) product: entry (i,j) of the result is the XOR over t of
// a(i,t) & b(t,j). Inner dimensions must match.
TiledBitMatrix gf2_multiply(const TiledBitMatrix& a, const TiledBitMatrix& b);

// Sparse-row GF(2) product: row i of the result is the XOR of the rows of b
// listed in a_rows[i]. Bit-exact against gf2_multiply on the densified a.
TiledBitMatrix gf2_multiply_sparse(std::span<const std::vector<uint32_t>> a_rows,
                                   const TiledBitMatrix& b);

}  // namespace cliffsym
