#pragma once

#include <atomic>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace sqdiff::cli {

inline constexpr std::string_view kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCoreError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInterrupted = 3;

/// Runs one command line (without the program name). JSON results go to
/// `out`, diagnostics to `err`. `interrupt` lets a signal handler stop a
/// running search between blocks.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* interrupt = nullptr);

}  // namespace sqdiff::cli
