#pragma once

// Exhaustive enumeration of primitive Euler triples with x < N.
//
// Every (leg, hypotenuse) pair is a multiple k * (m^2-n^2, 2mn, m^2+n^2) of a
// primitive Pythagorean triple. Pairs are bucketed by hypotenuse one block of
// hypotenuses at a time; inside a bucket all leg pairs y > z are tested for
// y^2 - z^2 being a square (residue prefilter first, then an exact root).
// Blocks are independent and are processed by a worker pool; records are
// emitted in block order by a single writer, which also owns the checkpoint.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sqdiff/arith.hpp"
#include "sqdiff/triples.hpp"

namespace sqdiff {

enum class EmitFormat { Jsonl, Csv };
enum class ArithmeticMode { Auto, Fast64, BigInt };

struct SearchConfig {
  Integer bound{2};
  std::uint64_t block_width = 100000;
  unsigned worker_count = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  EmitFormat emit_format = EmitFormat::Jsonl;
  ArithmeticMode arithmetic = ArithmeticMode::Auto;
  /// Stop after this many blocks in one invocation, as if interrupted.
  std::optional<std::uint64_t> max_blocks;

  /// Throws Error(Config) unless bound >= 2, block_width >= 1, workers >= 1
  /// and the bound fits the 63-bit hypotenuse range.
  void validate() const;
  /// Hex token over everything that determines the record stream.
  std::string hash() const;
};

struct SolutionRecord {
  EulerTriple triple;
  Rational m;  // v(x-z) / (u(y-z))

  const SquareCertificate& certificate() const noexcept { return triple.certificate(); }
  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

SolutionRecord make_record(const EulerTriple& e);

struct Checkpoint {
  Integer block_end;
  Integer count;
  std::string config_hash;
};

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void write(std::span<const SolutionRecord> block) = 0;
  virtual void flush() {}
};

class CollectingSink final : public RecordSink {
 public:
  void write(std::span<const SolutionRecord> block) override { records.insert(records.end(), block.begin(), block.end()); }
  std::vector<SolutionRecord> records;
};

class StreamSink final : public RecordSink {
 public:
  StreamSink(std::ostream& os, EmitFormat fmt, bool write_header);
  void write(std::span<const SolutionRecord> block) override;
  void flush() override;

 private:
  std::ostream& os_;
  EmitFormat fmt_;
};

std::string format_record(const SolutionRecord& r, EmitFormat fmt);
inline constexpr std::string_view kCsvHeader = "x,y,z,t,u,v,m";

/// Prepares an output file for appending. With no checkpointed count the file
/// is emptied; otherwise it is cut back to its header (CSV) plus the first
/// `resume_records` records, dropping anything written after the last
/// checkpoint. Throws Error(Io) if the file holds fewer records than that.
void truncate_output(const std::filesystem::path& path, EmitFormat fmt, std::optional<std::uint64_t> resume_records);

struct SearchOutcome {
  Integer count;
  bool completed = false;
  std::uint64_t block_end = 0;
};

/// Runs (or resumes, when the checkpoint file exists) the search. Throws
/// Error(Config) for an invalid config or a checkpoint from a different
/// config, Error(Io) on checkpoint I/O failures.
SearchOutcome search(const SearchConfig& cfg, RecordSink& sink, const std::atomic<bool>* interrupt = nullptr);

/// All records with x < bound, in emission order.
std::vector<SolutionRecord> search_records(std::uint64_t bound, unsigned workers = 1,
                                           ArithmeticMode mode = ArithmeticMode::Auto);

/// hypotenuse -> legs y (0 < y < x, x^2 - y^2 square), descending, for every
/// hypotenuse in [lo, hi) that has at least one leg.
std::map<std::uint64_t, std::vector<std::uint64_t>> legs_by_hypotenuse(std::uint64_t lo, std::uint64_t hi);

struct NaiveResult {
  Integer count;
  std::vector<SolutionRecord> records;
};

inline constexpr std::uint64_t kNaiveSearchLimit = 100000;

/// Quadratic double loop with plain integer square roots; no Euclid
/// generation and no residue filter. Throws Error(Config) for N > 10^5.
NaiveResult naive_oracle_search(std::uint64_t N);

}  // namespace sqdiff
