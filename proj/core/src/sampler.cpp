#include "cliffsym/sampler.hpp"

#include <stdexcept>
#include <thread>

namespace cliffsym {

namespace {

// Sets the symbol bits of one group for one shot from a single keyed draw.
void fill_group(TiledBitMatrix& data, const SymbolGroup& g, uint32_t gid,
                uint64_t seed, size_t shot) {
  uint64_t u = keyed_draw(seed, gid, shot);
  switch (g.distribution) {
    case GroupDistribution::kConstantOne:
      data.set_bit(g.first_symbol, shot, true);
      break;
    case GroupDistribution::kFairCoin:
      data.set_bit(g.first_symbol, shot, u & 1);
      break;
    case GroupDistribution::kBernoulli:
      data.set_bit(g.first_symbol, shot, unit_double(u) < g.param);
      break;
    case GroupDistribution::kDepolarize1: {
      double v = unit_double(u);
      if (v < 1.0 - g.param) break;  // identity, both bits stay zero
      double r = (v - (1.0 - g.param)) / g.param;  // uniform in [0,1)
      int pattern = 1 + std::min(2, static_cast<int>(r * 3.0));  // X, Z, Y
      data.set_bit(g.first_symbol, shot, pattern & 1);
      data.set_bit(g.first_symbol + 1, shot, (pattern >> 1) & 1);
      break;
    }
    case GroupDistribution::kDepolarize2: {
      double v = unit_double(u);
      if (v < 1.0 - g.param) break;
      double r = (v - (1.0 - g.param)) / g.param;
      int pattern = 1 + std::min(14, static_cast<int>(r * 15.0));
      for (uint32_t b = 0; b < 4; ++b) {
        if ((pattern >> b) & 1) data.set_bit(g.first_symbol + b, shot, true);
      }
      break;
    }
  }
}

}  // namespace

SymbolAssignmentBatch draw_assignments(const SymbolRegistry& registry,
                                       size_t n_smp, uint64_t seed) {
  if (n_smp == 0) throw std::invalid_argument("need at least one shot");
  SymbolAssignmentBatch batch{TiledBitMatrix(registry.size(), n_smp)};
  for (size_t shot = 0; shot < n_smp; ++shot) {
    batch.data.set_bit(0, shot, true);
    for (uint32_t gid = 1; gid < registry.group_count(); ++gid) {
      fill_group(batch.data, registry.group(gid), gid, seed, shot);
    }
  }
  return batch;
}

SampleMatrix sample(const std::vector<MeasurementExpression>& expressions,
                    const SymbolAssignmentBatch& batch, unsigned threads) {
  for (const auto& e : expressions) {
    for (uint32_t s : e.symbols) {
      if (s >= batch.n_symbols()) throw std::out_of_range("symbol id out of range");
    }
  }

  SampleMatrix out;
  out.measurement_order.resize(expressions.size());
  for (size_t i = 0; i < expressions.size(); ++i) {
    out.measurement_order[i] = static_cast<uint32_t>(i);
  }

  if (threads <= 1 || batch.data.tile_cols() <= 1) {
    std::vector<std::vector<uint32_t>> rows(expressions.size());
    for (size_t i = 0; i < expressions.size(); ++i) rows[i] = expressions[i].symbols;
    out.data = gf2_multiply_sparse(rows, batch.data);
    return out;
  }

  // Shot blocks of one tile column are disjoint work units: each worker owns
  // a slice of tiles of both the batch copy and the result.
  TiledBitMatrix src = batch.data;
  src.ensure_order(TileOrder::kRowMajor);
  TiledBitMatrix res(expressions.size(), batch.n_shots());
  res.ensure_order(TileOrder::kRowMajor);
  size_t blocks = src.tile_cols();
  std::vector<std::thread> workers;
  unsigned n_workers = std::min<unsigned>(threads, static_cast<unsigned>(blocks));
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&, w] {
      for (size_t blk = w; blk < blocks; blk += n_workers) {
        for (size_t i = 0; i < expressions.size(); ++i) {
          unsigned kd = i % 8;
          uint64_t* dseg = res.row_segment(i, blk);
          for (uint32_t s : expressions[i].symbols) {
            const uint64_t* sseg = src.row_segment(s, blk);
            unsigned ks = s % 8;
            for (size_t t = 0; t < Tile::kWordsPerSegment; ++t) {
              dseg[t] ^= ((sseg[t] >> ks) & kLaneMask) << kd;
            }
          }
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  res.ensure_order(TileOrder::kColumnMajor);
  out.data = std::move(res);
  return out;
}

BitVec shot_bits(const SampleMatrix& m, size_t shot) {
  return m.data.column_bits(shot);
}

std::string encode_shots(const SampleMatrix& m, ShotFormat format) {
  std::string out;
  size_t n_m = m.n_measurements();
  size_t n_smp = m.n_shots();
  if (format == ShotFormat::k01) {
    out.reserve(n_smp * (n_m + 1));
    for (size_t j = 0; j < n_smp; ++j) {
      BitVec bits = shot_bits(m, j);
      for (size_t k = 0; k < n_m; ++k) out.push_back(bits.get(k) ? '1' : '0');
      out.push_back('\n');
    }
  } else {
    size_t stride = (n_m + 7) / 8;
    out.reserve(n_smp * stride);
    for (size_t j = 0; j < n_smp; ++j) {
      BitVec bits = shot_bits(m, j);
      for (size_t b = 0; b < stride; ++b) {
        out.push_back(static_cast<char>(bits.get_byte(b)));
      }
    }
  }
  return out;
}

}  // namespace cliffsym
