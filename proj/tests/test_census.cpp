#include "dompoly/census.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

using namespace dompoly;

TEST_CASE("four-decimal rendering rounds half up") {
  CHECK(round4(Rat(0)) == "0.0000");
  CHECK(round4(Rat(1)) == "1.0000");
  CHECK(round4(make_rat(1, 3)) == "0.3333");
  CHECK(round4(make_rat(2, 3)) == "0.6667");
  CHECK(round4(make_rat(1, 20000)) == "0.0001");   // 0.00005 ties upward
  CHECK(round4(make_rat(1, 20001)) == "0.0000");   // just under the tie
  CHECK(round4(make_rat(15329, 20000)) == "0.7665");  // 0.76645
  CHECK(round4(make_rat(338, 441)) == "0.7664");
  CHECK(round4(make_rat(7, 2)) == "3.5000");
  CHECK_THROWS_AS(round4(Rat(-1)), std::invalid_argument);
}

TEST_CASE("height-1 quadratic censuses counted by hand") {
  // Monic: X^2 + bX + c is dominant iff b != 0 and b^2 > 4c; that is
  // (b, c) in {(+-1, -1), (+-1, 0)}.
  CensusJob mj{CensusKind::Monic, 2, 1, true, 1};
  CensusReport mr = census_run(mj);
  CHECK(mr.counts.total == 9);
  CHECK(mr.counts.dominant == 4);
  CHECK(mr.denominator == 9);

  // General: both lead signs double the monic picture.
  CensusJob gj{CensusKind::General, 2, 1, true, 1};
  CensusReport gr = census_run(gj);
  CHECK(gr.counts.total == 18);
  CHECK(gr.counts.dominant == 8);
  // X^2 +- X and their negations factor; the +-(X^2 +- X - 1) family stays.
  CHECK(gr.counts.dominant_irreducible == 4);
  CHECK(gr.counts.irreducible == 10);
  CHECK(gr.denominator == 18);
}

TEST_CASE("monic quadratic census at height 10 hits the frozen share") {
  CensusJob j{CensusKind::Monic, 2, 10, true, 1};
  CensusReport r = census_run(j);
  CHECK(r.counts.total == 441);
  CHECK(r.counts.dominant == 338);
  CHECK(round4(r.dominant_share()) == "0.7664");
}

TEST_CASE("symmetry-reduced walks equal the full box") {
  for (CensusKind kind : {CensusKind::Monic, CensusKind::General}) {
    for (int n : {2, 3}) {
      for (long H : {1L, 2L}) {
        CensusJob reduced{kind, n, H, true, 1};
        CensusJob full{kind, n, H, false, 1};
        CensusReport a = census_run(reduced);
        CensusReport b = census_run(full);
        CAPTURE(n);
        CAPTURE(H);
        CHECK(a.counts.total == b.counts.total);
        CHECK(a.counts.dominant == b.counts.dominant);
        CHECK(a.counts.irreducible == b.counts.irreducible);
        CHECK(a.counts.dominant_irreducible == b.counts.dominant_irreducible);
        CHECK(a.counts.total == census_box_size(reduced));
      }
    }
  }
}

TEST_CASE("chunk partitioning never changes the fold") {
  CensusJob base{CensusKind::General, 3, 2, true, 1};
  CensusReport whole = census_run(base);
  for (int chunks : {4, 16}) {
    CensusJob split = base;
    split.chunks = chunks;
    CensusReport part = census_run(split);
    CAPTURE(chunks);
    CHECK(whole.counts == part.counts);  // including the digest
  }
  // the same partition folded chunk by chunk
  CensusJob split = base;
  split.chunks = 5;
  CensusCounts acc;
  for (int c = 0; c < split.chunks; ++c) acc += census_chunk(split, c);
  CHECK(acc == whole.counts);
}

TEST_CASE("index space accounting") {
  CensusJob m{CensusKind::Monic, 3, 2, true, 1};
  CHECK(census_index_space(m) == 125);  // 5^3
  CensusJob g{CensusKind::General, 3, 2, true, 1};
  CHECK(census_index_space(g) == 250);  // 2 * 5^3 positive leads
  CensusJob gf{CensusKind::General, 3, 2, false, 1};
  CHECK(census_index_space(gf) == 500);
  CHECK(census_box_size(g) == 500);
  CHECK_THROWS_AS(census_index_space(CensusJob{CensusKind::Monic, 1, 2, true, 1}),
                  std::invalid_argument);
}

TEST_CASE("checkpointed runs resume and refuse foreign files") {
  const std::string path = "census_ckpt_test.jsonl";
  std::remove(path.c_str());

  CensusJob job{CensusKind::General, 2, 3, true, 4};
  CensusReport fresh = census_run(job);

  int fired = 0;
  CensusReport first = census_run(job, path, [&](int, const CensusCounts&) {
    ++fired;
  });
  CHECK(fired == 4);
  CHECK(first.counts == fresh.counts);

  // a second run restores every chunk from the file
  CensusReport replay = census_run(job, path);
  CHECK(replay.counts == fresh.counts);

  // drop the last two chunk lines to fake an interrupted run
  {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i + 2 < lines.size(); ++i) out << lines[i] << "\n";
  }
  CensusReport resumed = census_run(job, path);
  CHECK(resumed.counts == fresh.counts);

  // same file, different job: refuse rather than mix runs
  CensusJob other = job;
  other.height = 4;
  CHECK_THROWS_AS(census_run(other, path), std::runtime_error);

  std::remove(path.c_str());
}
