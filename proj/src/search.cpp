#include "sqdiff/search.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "sqdiff/errors.hpp"
#include "sqdiff/json_io.hpp"
#include "sqdiff/simd/pair_filter.hpp"
#include "sqdiff/square_filter.hpp"

namespace sqdiff {

namespace {

struct Primitive {
  std::uint64_t hyp, leg_a, leg_b;
};

// Primitive Pythagorean triples (m^2-n^2, 2mn, m^2+n^2) with hypotenuse < N,
// sorted by hypotenuse.
std::vector<Primitive> primitives_below(std::uint64_t N) {
  std::vector<Primitive> out;
  for (std::uint64_t m = 2; m * m + 1 < N; ++m) {
    for (std::uint64_t n = (m & 1) ? 2 : 1; n < m; n += 2) {
      const std::uint64_t h = m * m + n * n;
      if (h >= N) break;
      if (std::gcd(m, n) != 1) continue;
      out.push_back({h, m * m - n * n, 2 * m * n});
    }
  }
  std::sort(out.begin(), out.end(), [](const Primitive& p, const Primitive& q) { return p.hyp < q.hyp; });
  return out;
}

// Legs of every hypotenuse in [lo, hi) in CSR layout: hypotenuse x owns
// entries [offset[x-lo], offset[x-lo+1]). `other` holds sqrt(x^2 - leg^2).
struct Buckets {
  std::uint64_t lo = 0;
  std::vector<std::size_t> offset;
  std::vector<std::uint64_t> leg, other;
};

template <typename F>
void for_each_multiple(std::span<const Primitive> prims, std::uint64_t lo, std::uint64_t hi, F&& f) {
  for (const Primitive& p : prims) {
    if (p.hyp >= hi) break;
    const std::uint64_t kmin = std::max<std::uint64_t>(1, (lo + p.hyp - 1) / p.hyp);
    for (std::uint64_t k = kmin; k <= (hi - 1) / p.hyp; ++k) f(k * p.hyp, k * p.leg_a, k * p.leg_b);
  }
}

Buckets build_buckets(std::span<const Primitive> prims, std::uint64_t lo, std::uint64_t hi) {
  Buckets b;
  b.lo = lo;
  const std::size_t width = hi - lo;
  b.offset.assign(width + 1, 0);
  for_each_multiple(prims, lo, hi, [&](std::uint64_t x, std::uint64_t, std::uint64_t) { b.offset[x - lo + 1] += 2; });
  std::partial_sum(b.offset.begin(), b.offset.end(), b.offset.begin());
  b.leg.resize(b.offset.back());
  b.other.resize(b.offset.back());
  std::vector<std::size_t> cursor(b.offset.begin(), b.offset.end() - 1);
  for_each_multiple(prims, lo, hi, [&](std::uint64_t x, std::uint64_t a, std::uint64_t c) {
    std::size_t& at = cursor[x - lo];
    b.leg[at] = a;
    b.other[at++] = c;
    b.leg[at] = c;
    b.other[at++] = a;
  });
  return b;
}

struct RawSolution {
  std::uint64_t x, y, z;
};

struct LegPair {
  std::uint64_t leg, other;
};

// Tests every pair y > z among the legs of x. Legs arrive sorted descending.
void scan_fast64(std::uint64_t x, std::span<const LegPair> legs, simd::PairFilterFn filter, simd::LegResidues& res,
                 std::vector<std::uint32_t>& idx, std::vector<RawSolution>& out) {
  res.clear();
  for (const LegPair& l : legs) res.push(l.leg * l.leg);
  idx.resize(legs.size());
  for (std::size_t i = 0; i + 1 < legs.size(); ++i) {
    const std::uint64_t y = legs[i].leg;
    const std::size_t hits = filter(simd::Residue4::at(res, i), simd::ResidueView::tail(res, i + 1), idx.data());
    for (std::size_t h = 0; h < hits; ++h) {
      const std::uint64_t z = legs[i + 1 + idx[h]].leg;
      if (!exact_sqrt_u64_plain(y * y - z * z)) continue;
      if (std::gcd(std::gcd(x, y), z) != 1) continue;
      out.push_back({x, y, z});
    }
  }
}

void scan_bigint(std::uint64_t x, std::span<const LegPair> legs, std::vector<RawSolution>& out) {
  const Integer X(x);
  for (std::size_t i = 0; i + 1 < legs.size(); ++i) {
    const Integer Y(legs[i].leg);
    for (std::size_t j = i + 1; j < legs.size(); ++j) {
      const Integer Z(legs[j].leg);
      if (!is_perfect_square(Y * Y - Z * Z)) continue;
      if (gcd(gcd(X, Y), Z) != Integer(1)) continue;
      out.push_back({x, legs[i].leg, legs[j].leg});
    }
  }
}

std::vector<RawSolution> process_block(std::span<const Primitive> prims, std::uint64_t lo, std::uint64_t hi, bool bigint,
                                       simd::PairFilterFn filter) {
  const Buckets b = build_buckets(prims, lo, hi);
  std::vector<RawSolution> out;
  std::vector<LegPair> legs;
  simd::LegResidues res;
  std::vector<std::uint32_t> idx;
  for (std::uint64_t x = lo; x < hi; ++x) {
    const std::size_t begin = b.offset[x - lo], end = b.offset[x - lo + 1];
    if (end - begin < 2) continue;
    legs.clear();
    for (std::size_t i = begin; i < end; ++i) legs.push_back({b.leg[i], b.other[i]});
    std::sort(legs.begin(), legs.end(), [](const LegPair& p, const LegPair& q) { return p.leg > q.leg; });
    if (bigint)
      scan_bigint(x, legs, out);
    else
      scan_fast64(x, legs, filter, res, idx, out);
  }
  std::sort(out.begin(), out.end(), [](const RawSolution& p, const RawSolution& q) {
    return std::tie(p.x, p.y, p.z) < std::tie(q.x, q.y, q.z);
  });
  return out;
}

std::vector<SolutionRecord> to_records(const std::vector<RawSolution>& raw) {
  std::vector<SolutionRecord> out;
  out.reserve(raw.size());
  for (const RawSolution& r : raw) out.push_back(make_record(verify_euler(Integer(r.x), Integer(r.y), Integer(r.z))));
  return out;
}

constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 62;
constexpr std::uint64_t kFast64Bound = std::uint64_t{1} << 32;  // (N-1)^2 < 2^64

std::string_view format_name(EmitFormat fmt) { return fmt == EmitFormat::Jsonl ? "jsonl" : "csv"; }

bool use_bigint(const SearchConfig& cfg, std::uint64_t N) {
  switch (cfg.arithmetic) {
    case ArithmeticMode::BigInt: return true;
    case ArithmeticMode::Fast64:
      if (N > kFast64Bound) throw Error(ErrorKind::Config, "arith", "64-bit arithmetic needs bound <= 2^32");
      return false;
    case ArithmeticMode::Auto: return N > kFast64Bound;
  }
  return true;
}

}  // namespace

void SearchConfig::validate() const {
  if (bound < Integer(2)) throw Error(ErrorKind::Config, "bound>=2", "bound must be at least 2");
  if (bound > Integer(kMaxBound)) throw Error(ErrorKind::Config, "bound<=2^62", "bound exceeds 2^62");
  if (block_width < 1) throw Error(ErrorKind::Config, "block_width>=1", "block width must be at least 1");
  if (worker_count < 1) throw Error(ErrorKind::Config, "workers>=1", "worker count must be at least 1");
}

std::string SearchConfig::hash() const {
  const std::string key = "sqdiff-search-v1|bound=" + bound.to_string() + "|block_width=" + std::to_string(block_width) +
                          "|format=" + std::string(format_name(emit_format));
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

SolutionRecord make_record(const EulerTriple& e) {
  return {e, Rational(e.v() * (e.x() - e.z()), e.u() * (e.y() - e.z()))};
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "checkpoint", "cannot open checkpoint " + path.string());
  try {
    return json::checkpoint_from_json(json::Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, "checkpoint", "corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << json::to_json(cp).dump() << '\n';
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "checkpoint", "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::Io, "checkpoint", "cannot replace " + path.string() + ": " + ec.message());
}

std::string format_record(const SolutionRecord& r, EmitFormat fmt) {
  if (fmt == EmitFormat::Jsonl) return json::to_json(r).dump();
  const EulerTriple& e = r.triple;
  return e.x().to_string() + "," + e.y().to_string() + "," + e.z().to_string() + "," + e.t().to_string() + "," +
         e.u().to_string() + "," + e.v().to_string() + "," + r.m.to_string();
}

StreamSink::StreamSink(std::ostream& os, EmitFormat fmt, bool write_header) : os_(os), fmt_(fmt) {
  if (write_header && fmt_ == EmitFormat::Csv) os_ << kCsvHeader << '\n';
}

void StreamSink::write(std::span<const SolutionRecord> block) {
  for (const SolutionRecord& r : block) os_ << format_record(r, fmt_) << '\n';
}

void StreamSink::flush() {
  os_.flush();
  if (!os_) throw Error(ErrorKind::Io, "output", "failed to write records");
}

void truncate_output(const std::filesystem::path& path, EmitFormat fmt, std::optional<std::uint64_t> resume_records) {
  if (!resume_records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "output", "cannot create " + path.string());
    return;
  }
  const std::uint64_t keep_lines = *resume_records + (fmt == EmitFormat::Csv ? 1 : 0);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (keep_lines == 0) return truncate_output(path, fmt, std::nullopt);
    throw Error(ErrorKind::Io, "output", "output file " + path.string() + " missing on resume");
  }
  std::uint64_t lines = 0, bytes = 0;
  std::string line;
  while (lines < keep_lines && std::getline(in, line)) {
    if (in.eof()) break;  // unterminated trailing line is an incomplete write
    bytes += line.size() + 1;
    ++lines;
  }
  in.close();
  if (lines < keep_lines)
    throw Error(ErrorKind::Io, "output", "output file " + path.string() + " has fewer records than the checkpoint");
  std::filesystem::resize_file(path, bytes);
}

SearchOutcome search(const SearchConfig& cfg, RecordSink& sink, const std::atomic<bool>* interrupt) {
  cfg.validate();
  const std::uint64_t N = cfg.bound.to_u64();
  const std::uint64_t W = cfg.block_width;
  const std::uint64_t total_blocks = N / W + (N % W != 0);
  const bool bigint = use_bigint(cfg, N);
  const auto block_hi = [&](std::uint64_t b) { return std::min(N, (b + 1) * W); };

  SearchOutcome outcome;
  outcome.count = Integer(0);
  std::uint64_t start = 0;
  if (cfg.checkpoint_path) {
    if (auto cp = read_checkpoint(*cfg.checkpoint_path)) {
      if (cp->config_hash != cfg.hash())
        throw Error(ErrorKind::Config, "config_hash", "checkpoint was written for a different bound/block width/format");
      const std::uint64_t end = cp->block_end.to_u64();
      if (end > N || (end != N && end % W != 0))
        throw Error(ErrorKind::Config, "block_end", "checkpoint block_end is not a block boundary");
      start = end / W + (end % W != 0);
      outcome.count = cp->count;
      outcome.block_end = end;
    }
  }
  std::uint64_t stop = total_blocks;
  if (cfg.max_blocks) stop = std::min(total_blocks, start + *cfg.max_blocks);
  if (start >= stop) {
    outcome.completed = start >= total_blocks;
    return outcome;
  }

  const std::vector<Primitive> prims = primitives_below(block_hi(stop - 1));
  const simd::PairFilterFn filter = simd::pair_filter_for(simd::selected_isa());
  const auto interrupted = [interrupt] { return interrupt != nullptr && interrupt->load(std::memory_order_relaxed); };

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, std::vector<SolutionRecord>> done;
  std::exception_ptr failure;
  bool abort = false;
  std::atomic<std::uint64_t> next{start};
  unsigned finished = 0;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(cfg.worker_count, stop - start));

  const auto work = [&] {
    try {
      for (;;) {
        {
          std::lock_guard lock(mu);
          if (abort) break;
        }
        if (interrupted()) break;
        const std::uint64_t b = next.fetch_add(1);
        if (b >= stop) break;
        auto records = to_records(process_block(prims, b * W, block_hi(b), bigint, filter));
        std::lock_guard lock(mu);
        done.emplace(b, std::move(records));
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      abort = true;
    }
    std::lock_guard lock(mu);
    ++finished;
    cv.notify_all();
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);

  std::uint64_t b = start;
  try {
    for (; b < stop; ++b) {
      std::vector<SolutionRecord> records;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done.contains(b) || failure || finished == workers; });
        if (failure || !done.contains(b)) break;
        records = std::move(done.at(b));
        done.erase(b);
      }
      sink.write(records);
      sink.flush();
      outcome.count += Integer(records.size());
      outcome.block_end = block_hi(b);
      if (cfg.checkpoint_path)
        write_checkpoint(*cfg.checkpoint_path, {Integer(outcome.block_end), outcome.count, cfg.hash()});
    }
  } catch (...) {
    {
      std::lock_guard lock(mu);
      abort = true;
    }
    pool.clear();
    throw;
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  outcome.completed = b >= total_blocks;
  return outcome;
}

std::vector<SolutionRecord> search_records(std::uint64_t bound, unsigned workers, ArithmeticMode mode) {
  SearchConfig cfg;
  cfg.bound = Integer(bound);
  cfg.worker_count = workers;
  cfg.arithmetic = mode;
  CollectingSink sink;
  search(cfg, sink);
  return std::move(sink.records);
}

std::map<std::uint64_t, std::vector<std::uint64_t>> legs_by_hypotenuse(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || lo > hi) throw Error(ErrorKind::Precondition, "0<lo<=hi", "invalid hypotenuse range");
  const auto prims = primitives_below(hi);
  const Buckets b = build_buckets(prims, lo, hi);
  std::map<std::uint64_t, std::vector<std::uint64_t>> out;
  for (std::uint64_t x = lo; x < hi; ++x) {
    const std::size_t begin = b.offset[x - lo], end = b.offset[x - lo + 1];
    if (begin == end) continue;
    std::vector<std::uint64_t> legs(b.leg.begin() + static_cast<std::ptrdiff_t>(begin),
                                    b.leg.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(legs.begin(), legs.end(), std::greater<>());
    out.emplace(x, std::move(legs));
  }
  return out;
}

NaiveResult naive_oracle_search(std::uint64_t N) {
  if (N > kNaiveSearchLimit)
    throw Error(ErrorKind::Config, "N<=100000", "naive oracle search refuses bounds above 100000");
  NaiveResult result;
  std::vector<std::uint64_t> legs;
  for (std::uint64_t x = 1; x < N; ++x) {
    legs.clear();
    for (std::uint64_t y = x - 1; y > 0; --y)
      if (exact_sqrt_u64_plain(x * x - y * y)) legs.push_back(y);
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        const std::uint64_t y = legs[i], z = legs[j];
        if (!exact_sqrt_u64_plain(y * y - z * z)) continue;
        if (std::gcd(std::gcd(x, y), z) != 1) continue;
        result.records.push_back(make_record(verify_euler(Integer(x), Integer(y), Integer(z))));
      }
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const SolutionRecord& p, const SolutionRecord& q) { return p.triple < q.triple; });
  result.count = Integer(result.records.size());
  return result;
}

}  // namespace sqdiff
