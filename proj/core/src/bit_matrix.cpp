#include "cliffsym/bit_matrix.hpp"

#include <stdexcept>

namespace cliffsym {

namespace {

constexpr size_t kTileBits = Tile::kBits;

size_t div_up(size_t a, size_t b) { return (a + b - 1) / b; }

}  // namespace

TiledBitMatrix::TiledBitMatrix(size_t rows, size_t cols)
    : rows_(rows),
      cols_(cols),
      tile_rows_(div_up(rows, kTileBits)),
      tile_cols_(div_up(cols, kTileBits)),
      tiles_(tile_rows_ * tile_cols_) {
  for (auto& t : tiles_) t.fill_zero();
}

void TiledBitMatrix::check_rc(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("TiledBitMatrix index");
}

bool TiledBitMatrix::get_bit(size_t r, size_t c) const {
  check_rc(r, c);
  size_t i = r % kTileBits, j = c % kTileBits;
  if (order_ == TileOrder::kRowMajor) std::swap(i, j);
  const Tile& t = tile(r / kTileBits, c / kTileBits);
  uint64_t w = t.words[(j / 8) * Tile::kWordsPerSegment + i / 8];
  return (w >> (8 * (i % 8) + j % 8)) & 1;
}

void TiledBitMatrix::set_bit(size_t r, size_t c, bool v) {
  check_rc(r, c);
  size_t i = r % kTileBits, j = c % kTileBits;
  if (order_ == TileOrder::kRowMajor) std::swap(i, j);
  Tile& t = tile(r / kTileBits, c / kTileBits);
  uint64_t& w = t.words[(j / 8) * Tile::kWordsPerSegment + i / 8];
  uint64_t mask = uint64_t{1} << (8 * (i % 8) + j % 8);
  w = v ? (w | mask) : (w & ~mask);
}

void TiledBitMatrix::flip_bit(size_t r, size_t c) {
  check_rc(r, c);
  size_t i = r % kTileBits, j = c % kTileBits;
  if (order_ == TileOrder::kRowMajor) std::swap(i, j);
  Tile& t = tile(r / kTileBits, c / kTileBits);
  t.words[(j / 8) * Tile::kWordsPerSegment + i / 8] ^=
      uint64_t{1} << (8 * (i % 8) + j % 8);
}

uint64_t* TiledBitMatrix::column_segment(size_t tile_row, size_t col) {
  Tile& t = tile(tile_row, col / kTileBits);
  return &t.words[((col % kTileBits) / 8) * Tile::kWordsPerSegment];
}

const uint64_t* TiledBitMatrix::column_segment(size_t tile_row, size_t col) const {
  const Tile& t = tile(tile_row, col / kTileBits);
  return &t.words[((col % kTileBits) / 8) * Tile::kWordsPerSegment];
}

uint64_t* TiledBitMatrix::row_segment(size_t row, size_t tile_col) {
  Tile& t = tile(row / kTileBits, tile_col);
  return &t.words[((row % kTileBits) / 8) * Tile::kWordsPerSegment];
}

const uint64_t* TiledBitMatrix::row_segment(size_t row, size_t tile_col) const {
  const Tile& t = tile(row / kTileBits, tile_col);
  return &t.words[((row % kTileBits) / 8) * Tile::kWordsPerSegment];
}

void TiledBitMatrix::column_op_xor(size_t dst_col, size_t src_col) {
  if (order_ != TileOrder::kColumnMajor) {
    throw std::logic_error("column_op_xor requires column-major tiles");
  }
  if (dst_col == src_col) throw std::invalid_argument("column xored into itself");
  if (dst_col >= cols_ || src_col >= cols_) {
    throw std::out_of_range("column index");
  }
  unsigned kd = dst_col % 8, ks = src_col % 8;
  for (size_t tr = 0; tr < tile_rows_; ++tr) {
    uint64_t* d = column_segment(tr, dst_col);
    const uint64_t* s = column_segment(tr, src_col);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      d[i] ^= ((s[i] >> ks) & kLaneMask) << kd;
    }
  }
}

void TiledBitMatrix::column_swap(size_t a, size_t b) {
  if (order_ != TileOrder::kColumnMajor) {
    throw std::logic_error("column_swap requires column-major tiles");
  }
  if (a >= cols_ || b >= cols_) throw std::out_of_range("column index");
  if (a == b) return;
  unsigned ka = a % 8, kb = b % 8;
  for (size_t tr = 0; tr < tile_rows_; ++tr) {
    uint64_t* sa = column_segment(tr, a);
    uint64_t* sb = column_segment(tr, b);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      uint64_t va = (sa[i] >> ka) & kLaneMask;
      uint64_t vb = (sb[i] >> kb) & kLaneMask;
      uint64_t diff = va ^ vb;
      sa[i] ^= diff << ka;
      sb[i] ^= diff << kb;
    }
  }
}

BitVec TiledBitMatrix::column_bits(size_t c) const {
  if (order_ != TileOrder::kColumnMajor) {
    throw std::logic_error("column_bits requires column-major tiles");
  }
  if (c >= cols_) throw std::out_of_range("column index");
  BitVec out(rows_);
  size_t n_words = (rows_ + 63) / 64;
  unsigned k = c % 8;
  for (size_t tr = 0; tr < tile_rows_; ++tr) {
    const uint64_t* s = column_segment(tr, c);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      size_t wi = tr * 8 + i / 8;
      if (wi >= n_words) break;
      uint8_t byte = gather_lane0(s[i] >> k);
      if (byte) out.set_word(wi, out.word(wi) | (uint64_t{byte} << ((i % 8) * 8)));
    }
  }
  return out;
}

BitVec TiledBitMatrix::column_select_and(size_t a, size_t b) const {
  if (order_ != TileOrder::kColumnMajor) {
    throw std::logic_error("column_select_and requires column-major tiles");
  }
  if (a >= cols_ || b >= cols_) throw std::out_of_range("column index");
  BitVec out(rows_);
  size_t n_words = (rows_ + 63) / 64;
  unsigned ka = a % 8, kb = b % 8;
  for (size_t tr = 0; tr < tile_rows_; ++tr) {
    const uint64_t* sa = column_segment(tr, a);
    const uint64_t* sb = column_segment(tr, b);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      size_t wi = tr * 8 + i / 8;
      if (wi >= n_words) break;
      uint8_t byte = gather_lane0((sa[i] >> ka) & (sb[i] >> kb));
      if (byte) out.set_word(wi, out.word(wi) | (uint64_t{byte} << ((i % 8) * 8)));
    }
  }
  return out;
}

void TiledBitMatrix::column_xor_bits(size_t dst_col, const BitVec& v) {
  if (order_ != TileOrder::kColumnMajor) {
    throw std::logic_error("column_xor_bits requires column-major tiles");
  }
  if (dst_col >= cols_) throw std::out_of_range("column index");
  if (v.size() != rows_) throw std::invalid_argument("bit vector length mismatch");
  unsigned k = dst_col % 8;
  for (size_t tr = 0; tr < tile_rows_; ++tr) {
    uint64_t* d = column_segment(tr, dst_col);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      uint8_t byte = v.get_byte(tr * 64 + i);
      if (byte) d[i] ^= scatter_lane0(byte) << k;
    }
  }
}

void TiledBitMatrix::row_op_xor(size_t dst_row, size_t src_row) {
  row_xor_from(dst_row, *this, src_row);
}

void TiledBitMatrix::row_xor_from(size_t dst_row, const TiledBitMatrix& src,
                                  size_t src_row) {
  if (order_ != TileOrder::kRowMajor || src.order_ != TileOrder::kRowMajor) {
    throw std::logic_error("row ops require row-major tiles");
  }
  if (dst_row >= rows_ || src_row >= src.rows_) throw std::out_of_range("row index");
  if (cols_ != src.cols_) throw std::invalid_argument("column count mismatch");
  if (this == &src && dst_row == src_row) {
    throw std::invalid_argument("row xored into itself");
  }
  unsigned kd = dst_row % 8, ks = src_row % 8;
  for (size_t tc = 0; tc < tile_cols_; ++tc) {
    uint64_t* d = row_segment(dst_row, tc);
    const uint64_t* s = src.row_segment(src_row, tc);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      d[i] ^= ((s[i] >> ks) & kLaneMask) << kd;
    }
  }
}

void TiledBitMatrix::row_copy(size_t dst_row, size_t src_row) {
  if (order_ != TileOrder::kRowMajor) {
    throw std::logic_error("row ops require row-major tiles");
  }
  if (dst_row >= rows_ || src_row >= rows_) throw std::out_of_range("row index");
  if (dst_row == src_row) return;
  unsigned kd = dst_row % 8, ks = src_row % 8;
  for (size_t tc = 0; tc < tile_cols_; ++tc) {
    uint64_t* d = row_segment(dst_row, tc);
    const uint64_t* s = row_segment(src_row, tc);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      uint64_t bits = (s[i] >> ks) & kLaneMask;
      d[i] = (d[i] & ~(kLaneMask << kd)) | (bits << kd);
    }
  }
}

void TiledBitMatrix::row_clear(size_t r) {
  if (order_ != TileOrder::kRowMajor) {
    throw std::logic_error("row ops require row-major tiles");
  }
  if (r >= rows_) throw std::out_of_range("row index");
  unsigned k = r % 8;
  for (size_t tc = 0; tc < tile_cols_; ++tc) {
    uint64_t* d = row_segment(r, tc);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      d[i] &= ~(kLaneMask << k);
    }
  }
}

BitVec TiledBitMatrix::row_bits(size_t r) const {
  if (order_ != TileOrder::kRowMajor) {
    throw std::logic_error("row ops require row-major tiles");
  }
  if (r >= rows_) throw std::out_of_range("row index");
  BitVec out(cols_);
  size_t n_words = (cols_ + 63) / 64;
  unsigned k = r % 8;
  for (size_t tc = 0; tc < tile_cols_; ++tc) {
    const uint64_t* s = row_segment(r, tc);
    for (size_t i = 0; i < Tile::kWordsPerSegment; ++i) {
      size_t wi = tc * 8 + i / 8;
      if (wi >= n_words) break;
      uint8_t byte = gather_lane0(s[i] >> k);
      if (byte) out.set_word(wi, out.word(wi) | (uint64_t{byte} << ((i % 8) * 8)));
    }
  }
  return out;
}

void TiledBitMatrix::local_transpose() {
  for (auto& t : tiles_) {
    uint64_t* w = t.words.data();
    for (size_t i = 0; i < 64; ++i) {
      w[i * 64 + i] = transpose8x8(w[i * 64 + i]);
      for (size_t j = i + 1; j < 64; ++j) {
        uint64_t a = transpose8x8(w[i * 64 + j]);
        uint64_t b = transpose8x8(w[j * 64 + i]);
        w[i * 64 + j] = b;
        w[j * 64 + i] = a;
      }
    }
  }
  order_ = order_ == TileOrder::kColumnMajor ? TileOrder::kRowMajor
                                             : TileOrder::kColumnMajor;
}

void TiledBitMatrix::ensure_order(TileOrder want) {
  if (order_ != want) local_transpose();
}

bool TiledBitMatrix::same_bits(const TiledBitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (get_bit(r, c) != o.get_bit(r, c)) return false;
    }
  }
  return true;
}

std::string TiledBitMatrix::to_text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.push_back(get_bit(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

TiledBitMatrix gf2_multiply(const TiledBitMatrix& a, const TiledBitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2_multiply dimensions");
  TiledBitMatrix ar = a;
  TiledBitMatrix br = b;
  ar.ensure_order(TileOrder::kRowMajor);
  br.ensure_order(TileOrder::kRowMajor);
  TiledBitMatrix out(a.rows(), b.cols());
  out.ensure_order(TileOrder::kRowMajor);
  for (size_t i = 0; i < ar.rows(); ++i) {
    unsigned k = i % 8;
    for (size_t tc = 0; tc < ar.tile_cols(); ++tc) {
      const uint64_t* seg = ar.row_segment(i, tc);
      for (size_t wj = 0; wj < Tile::kWordsPerSegment; ++wj) {
        uint8_t byte = gather_lane0(seg[wj] >> k);
        while (byte) {
          unsigned l = static_cast<unsigned>(std::countr_zero(byte));
          byte = static_cast<uint8_t>(byte & (byte - 1));
          size_t t = tc * Tile::kBits + wj * 8 + l;
          if (t < b.rows()) out.row_xor_from(i, br, t);
        }
      }
    }
  }
  out.ensure_order(TileOrder::kColumnMajor);
  return out;
}

TiledBitMatrix gf2_multiply_sparse(std::span<const std::vector<uint32_t>> a_rows,
                                   const TiledBitMatrix& b) {
  TiledBitMatrix br = b;
  br.ensure_order(TileOrder::kRowMajor);
  TiledBitMatrix out(a_rows.size(), b.cols());
  out.ensure_order(TileOrder::kRowMajor);
  for (size_t i = 0; i < a_rows.size(); ++i) {
    for (uint32_t t : a_rows[i]) {
      if (t >= b.rows()) throw std::out_of_range("sparse row index");
      out.row_xor_from(i, br, t);
    }
  }
  out.ensure_order(TileOrder::kColumnMajor);
  return out;
}

}  // namespace cliffsym
