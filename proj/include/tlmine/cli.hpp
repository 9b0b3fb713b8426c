#pragma once

#include "tlmine/ingest.hpp"
#include "tlmine/miner.hpp"
#include "tlmine/model.hpp"
#include "tlmine/rules.hpp"
#include "tlmine/tradelist.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tlmine::cli {

enum class Algo { tradelist, apriori };

struct RunConfig {
    std::string command;
    std::optional<std::filesystem::path> input;
    std::optional<SyntheticSpec> synthetic;
    std::optional<std::filesystem::path> update;
    std::optional<SupportThreshold> threshold;
    std::optional<Ratio> min_confidence;
    /// When set, logs go here under fixed names (tradelist.log, freq.log,
    /// conf.log); otherwise into the working directory with timestamped names.
    std::optional<std::filesystem::path> out_dir;
    Algo algo = Algo::tradelist;
    unsigned threads = 1;
    unsigned repeat = 1;
};

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kUsage = 2,
    /// Algorithms disagreed; no timings were reported.
    kMismatch = 3,
};

struct BenchRow {
    std::string algo;
    double elapsed_ms = 0.0;
    std::size_t raw_passes = 0;
    std::uint64_t work_ops = 0;
    std::size_t n_frequent = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Thrown by run_bench when the algorithms disagree.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Log renderers. File contents never carry timestamps.

/// `<n>-<label>, <label>, ...`, n from 1, level by level.
std::string format_frequent_log(const MineResult& result, const Dictionary& items);
/// `<X labels>-><Y labels> = <pct>` with labels comma-joined.
std::string format_rule_log(const std::vector<Rule>& rules, const Dictionary& items);
std::string format_bench_csv(const BenchReport& report);

/// Runs both miners `repeat` times; reports the median time. Throws
/// MismatchError when the results differ or the pass counters violate
/// tradelist == 1 <= max itemset size <= apriori.
BenchReport run_bench(const Database& db, const SupportThreshold& threshold, unsigned repeat,
                      unsigned threads = 1);

int cmd_tradelist(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rules(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_update(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tlmine::cli
