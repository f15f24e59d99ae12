#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/rational.hpp"

namespace dompoly {

// Exhaustive dominance statistics over coefficient boxes.
//
// Monic:   X^n + a_1 X^(n-1) + ... + a_n with every a_i in [-H, H];
//          the box holds (2H+1)^n polynomials.
// General: a_0 X^n + ... + a_n with a_0 in [-H, H] \ {0} and the rest in
//          [-H, H]; the box holds 2H * (2H+1)^n polynomials.
//
// Dominance, irreducibility and the box itself are invariant under the maps
// f -> -f and f -> +/- f(-X) (flip the sign of every other coefficient), so
// an exhaustive run only needs one representative per orbit, carried with its
// orbit size as a weight.  use_symmetry = false runs the full box instead;
// both modes produce identical totals, which the tests exploit.

enum class CensusKind { Monic, General };

struct CensusCounts {
  Int total = 0;                 // weighted number of polynomials covered
  Int dominant = 0;              // ... that are dominant
  Int irreducible = 0;           // ... irreducible (General runs only)
  Int dominant_irreducible = 0;  // ... both (General runs only)
  // XOR of per-polynomial record hashes: independent of chunk partitioning
  // and of evaluation order, so equal splits must match bit for bit.
  std::uint64_t digest = 0;

  CensusCounts& operator+=(const CensusCounts& o);
  bool operator==(const CensusCounts& o) const;
};

struct CensusJob {
  CensusKind kind = CensusKind::General;
  int degree = 2;    // n >= 2
  long height = 1;   // H >= 1
  bool use_symmetry = true;
  int chunks = 1;    // deterministic partition of the enumeration space
};

// Number of enumeration slots a run walks (canonical-orbit skips still cost a
// slot but no decision work).  Used for the CLI resource cap.
Int census_index_space(const CensusJob& job);

// Fold of one chunk, 0 <= chunk < job.chunks.  Pure and deterministic.
CensusCounts census_chunk(const CensusJob& job, int chunk);

struct CensusReport {
  CensusCounts counts;
  Int denominator = 1;  // full box size

  Rat dominant_share() const;
  Rat irreducible_share() const;
  Rat dominant_irreducible_share() const;
};

// Runs every chunk in order.  With a checkpoint path, finished chunks are
// appended as JSON lines under a job-fingerprint header and picked up again
// on restart; a header that does not match the job is an error.  on_chunk
// fires after each chunk (freshly computed or restored).
CensusReport census_run(
    const CensusJob& job, const std::string& checkpoint_path = "",
    const std::function<void(int, const CensusCounts&)>& on_chunk = {});

// Box size for the job's kind/degree/height: (2H+1)^n or 2H(2H+1)^n.
Int census_box_size(const CensusJob& job);

// Fixed-point rendering used by every table: four decimals, ties away from
// zero ("0.7664").  Pre: q >= 0.
std::string round4(const Rat& q);

}  // namespace dompoly
