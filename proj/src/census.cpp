#include "dompoly/census.hpp"

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dompoly/dominance.hpp"
#include "dompoly/factor.hpp"

namespace dompoly {
namespace {

using u64 = std::uint64_t;

void validate(const CensusJob& job) {
  if (job.degree < 2)
    throw std::invalid_argument("census: degree must be >= 2");
  if (job.height < 1)
    throw std::invalid_argument("census: height must be >= 1");
  if (job.chunks < 1)
    throw std::invalid_argument("census: chunks must be >= 1");
}

Int index_space_int(const CensusJob& job) {
  Int span = pow_int(2 * Int(job.height) + 1,
                     static_cast<unsigned long>(job.degree));
  if (job.kind == CensusKind::Monic) return span;
  // Nonzero leads; the symmetric walk keeps only the positive half and
  // recovers the mirror image through the orbit weight.
  Int leads = job.use_symmetry ? Int(job.height) : 2 * Int(job.height);
  return leads * span;
}

u64 index_space_u64(const CensusJob& job) {
  Int s = index_space_int(job);
  if (!s.fits_ulong_p())
    throw std::invalid_argument("census: enumeration space exceeds 2^64");
  return static_cast<u64>(s.get_ui());
}

// Index -> coefficient tuple, most significant digit = lead.  Digits run
// a_n (least significant) up to a_1, each in [-H, H].
void decode(const CensusJob& job, u64 idx, std::vector<long>& c) {
  const long H = job.height;
  const u64 B = static_cast<u64>(2 * H + 1);
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    c[i] = static_cast<long>(idx % B) - H;
    idx /= B;
  }
  if (job.kind == CensusKind::Monic) {
    c[0] = 1;
  } else if (job.use_symmetry) {
    c[0] = static_cast<long>(idx) + 1;  // 1..H
  } else {
    long L = static_cast<long>(idx);  // 0..2H-1 onto -H..-1, 1..H
    c[0] = (L < H) ? (L - H) : (L - H + 1);
  }
}

// The involution sigma negates every odd-position coefficient (a_i of
// X^(n-i) with i odd), i.e. maps f to the sign-normalized f(-X).  Positions
// only differ where c[i] != 0 and i is odd, so the tuple-vs-image lexical
// order is decided by the first such entry.  +1: canonical representative,
// 0: fixed point, -1: the mirror image is canonical.
int canonical_rank(const std::vector<long>& c) {
  for (std::size_t i = 1; i < c.size(); i += 2) {
    if (c[i] < 0) return +1;
    if (c[i] > 0) return -1;
  }
  return 0;
}

u64 item_hash(u64 idx, int weight, bool dom, bool irred) {
  unsigned char rec[10];
  for (int i = 0; i < 8; ++i)
    rec[i] = static_cast<unsigned char>(idx >> (8 * i));
  rec[8] = static_cast<unsigned char>(weight);
  rec[9] = static_cast<unsigned char>((dom ? 1 : 0) | (irred ? 2 : 0));
  return fnv1a(rec, sizeof rec);
}

nlohmann::json job_header(const CensusJob& job) {
  return {
      {"version", 1},
      {"kind", job.kind == CensusKind::Monic ? "monic" : "general"},
      {"degree", job.degree},
      {"height", job.height},
      {"symmetry", job.use_symmetry},
      {"chunks", job.chunks},
  };
}

std::string digest_hex(u64 d) {
  std::ostringstream os;
  os << std::hex << d;
  return os.str();
}

}  // namespace

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  total += o.total;
  dominant += o.dominant;
  irreducible += o.irreducible;
  dominant_irreducible += o.dominant_irreducible;
  digest ^= o.digest;
  return *this;
}

bool CensusCounts::operator==(const CensusCounts& o) const {
  return total == o.total && dominant == o.dominant &&
         irreducible == o.irreducible &&
         dominant_irreducible == o.dominant_irreducible && digest == o.digest;
}

Int census_index_space(const CensusJob& job) {
  validate(job);
  return index_space_int(job);
}

Int census_box_size(const CensusJob& job) {
  validate(job);
  Int span = pow_int(2 * Int(job.height) + 1,
                     static_cast<unsigned long>(job.degree));
  if (job.kind == CensusKind::Monic) return span;
  return 2 * Int(job.height) * span;
}

CensusCounts census_chunk(const CensusJob& job, int chunk) {
  validate(job);
  if (chunk < 0 || chunk >= job.chunks)
    throw std::invalid_argument("census: chunk index out of range");
  const u64 space = index_space_u64(job);
  const auto chunks = static_cast<unsigned>(job.chunks);
  const u64 lo = static_cast<u64>(static_cast<unsigned __int128>(space) *
                                  static_cast<unsigned>(chunk) / chunks);
  const u64 hi = static_cast<u64>(static_cast<unsigned __int128>(space) *
                                  (static_cast<unsigned>(chunk) + 1) / chunks);

  CensusCounts out;
  std::vector<long> c(static_cast<std::size_t>(job.degree) + 1);
  std::vector<Int> coeffs(c.size());
  for (u64 idx = lo; idx < hi; ++idx) {
    decode(job, idx, c);
    int weight = 1;
    if (job.use_symmetry) {
      int rank = canonical_rank(c);
      if (rank < 0) continue;  // the mirror tuple carries this orbit
      weight = (rank == 0) ? 1 : 2;
      if (job.kind == CensusKind::General) weight *= 2;  // negation pair
    }
    for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
    IntPoly f{std::vector<Int>(coeffs)};

    bool dom;
    bool irred = false;
    if (job.kind == CensusKind::General) {
      irred = is_irreducible(f);
      DecideOptions opt;
      opt.irreducible_hint = irred;
      dom = decide_dominant(f, opt).dominant;
    } else {
      dom = decide_dominant(f).dominant;
    }

    out.total += weight;
    if (dom) out.dominant += weight;
    if (irred) out.irreducible += weight;
    if (dom && irred) out.dominant_irreducible += weight;
    out.digest ^= item_hash(idx, weight, dom, irred);
  }
  return out;
}

Rat CensusReport::dominant_share() const {
  return make_rat(counts.dominant, denominator);
}

Rat CensusReport::irreducible_share() const {
  return make_rat(counts.irreducible, denominator);
}

Rat CensusReport::dominant_irreducible_share() const {
  return make_rat(counts.dominant_irreducible, denominator);
}

CensusReport census_run(
    const CensusJob& job, const std::string& checkpoint_path,
    const std::function<void(int, const CensusCounts&)>& on_chunk) {
  validate(job);
  std::vector<std::optional<CensusCounts>> done(
      static_cast<std::size_t>(job.chunks));
  const nlohmann::json header = job_header(job);
  bool have_header = false;

  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    std::string line;
    if (in && std::getline(in, line) && !line.empty()) {
      nlohmann::json h;
      try {
        h = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        throw std::runtime_error("census checkpoint is corrupt: " +
                                 checkpoint_path);
      }
      if (h != header)
        throw std::runtime_error(
            "census checkpoint belongs to a different run: " +
            checkpoint_path);
      have_header = true;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json row;
        try {
          row = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
          break;  // torn tail line from an interrupted run: recompute it
        }
        int cidx = row.at("chunk").get<int>();
        if (cidx < 0 || cidx >= job.chunks)
          throw std::runtime_error("census checkpoint: chunk out of range");
        CensusCounts cc;
        cc.total = Int(row.at("total").get<std::string>());
        cc.dominant = Int(row.at("dominant").get<std::string>());
        cc.irreducible = Int(row.at("irreducible").get<std::string>());
        cc.dominant_irreducible =
            Int(row.at("dominant_irreducible").get<std::string>());
        cc.digest = std::stoull(row.at("digest").get<std::string>(), nullptr, 16);
        done[static_cast<std::size_t>(cidx)] = cc;
      }
    }
  }

  std::ofstream out;
  if (!checkpoint_path.empty()) {
    out.open(checkpoint_path, std::ios::app);
    if (!out)
      throw std::runtime_error("census: cannot open checkpoint for append: " +
                               checkpoint_path);
    if (!have_header) {
      out << header.dump() << "\n";
      out.flush();
    }
  }

  CensusReport rep;
  rep.denominator = census_box_size(job);
  for (int cidx = 0; cidx < job.chunks; ++cidx) {
    CensusCounts cc;
    if (done[static_cast<std::size_t>(cidx)]) {
      cc = *done[static_cast<std::size_t>(cidx)];
    } else {
      cc = census_chunk(job, cidx);
      if (out.is_open()) {
        nlohmann::json row = {
            {"chunk", cidx},
            {"total", cc.total.get_str()},
            {"dominant", cc.dominant.get_str()},
            {"irreducible", cc.irreducible.get_str()},
            {"dominant_irreducible", cc.dominant_irreducible.get_str()},
            {"digest", digest_hex(cc.digest)},
        };
        out << row.dump() << "\n";
        out.flush();
      }
    }
    rep.counts += cc;
    if (on_chunk) on_chunk(cidx, cc);
  }
  return rep;
}

std::string round4(const Rat& q) {
  if (sgn(q) < 0) throw std::invalid_argument("round4: negative input");
  Int num = q.get_num() * 10000;
  const Int& den = q.get_den();
  Int v = (2 * num + den) / (2 * den);  // round half up; operands positive
  Int ip = v / 10000;
  Int fp = v % 10000;
  std::string frac = fp.get_str();
  frac.insert(0, 4 - frac.size(), '0');
  return ip.get_str() + "." + frac;
}

}  // namespace dompoly
