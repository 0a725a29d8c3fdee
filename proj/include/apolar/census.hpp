#pragma once

#include "apolar/rational.hpp"

#include <cstdint>
#include <vector>

namespace apolar {

struct CensusParams {
  int l = 0;
  int d = 0;
  int samples = 1;
  std::uint64_t seed = 7;
  int coeff_bound = 10;
};

struct CensusRow {
  int cactus_rank;
  int fiber_dim;
  int count;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusTable {
  CensusParams params;
  std::vector<CensusRow> rows;  // sorted by (cactus_rank, fiber_dim)
  int top_stratum;              // floor((l+2)/2)
  int top_count;
  Rational top_fraction;
};

/// Draws `samples` nonzero integer forms of degree l from the seed and
/// tabulates (cactus rank, dim C^d_P). Samples are evaluated on up to
/// `threads` workers (0 = hardware concurrency); the table depends only on
/// the parameters. Throws std::invalid_argument for samples < 1,
/// coeff_bound < 1, l < 0 or d outside [0, l].
CensusTable census(const CensusParams& params, unsigned threads = 0);

}  // namespace apolar
