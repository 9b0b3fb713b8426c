#include "tlmine/cli.hpp"

#include "tlmine/apriori.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tlmine::cli {

namespace {

std::string join_labels(const Itemset& s, const Dictionary& items, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += sep;
        out += items.label(s[i]);
    }
    return out;
}

std::string timestamp()
{
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm local{};
    localtime_r(&now, &local);
    std::ostringstream os;
    os << std::put_time(&local, "%Y%m%d_%H%M%S");
    return os.str();
}

std::filesystem::path log_path(const RunConfig& cfg, std::string_view kind)
{
    if (cfg.out_dir) {
        std::filesystem::create_directories(*cfg.out_dir);
        return *cfg.out_dir / (std::string(kind) + ".log");
    }
    return std::string(kind) + "_" + timestamp() + ".log";
}

Database load_input(const RunConfig& cfg)
{
    if (cfg.input && cfg.synthetic)
        throw Error("give either --input or --synthetic, not both");
    if (cfg.synthetic)
        return generate_synthetic(*cfg.synthetic);
    if (!cfg.input)
        throw Error("no input: use --input FILE or --synthetic n_tx,n_items,mean,seed");
    return parse_database(read_file(*cfg.input));
}

const SupportThreshold& require_threshold(const RunConfig& cfg)
{
    if (!cfg.threshold)
        throw Error("a support threshold is required: --minsupp N or --minsupp-frac F");
    return *cfg.threshold;
}

RuleQuery require_confidence(const RunConfig& cfg)
{
    if (!cfg.min_confidence)
        throw Error("a confidence threshold is required: --minconf F or --minconf NN%");
    RuleQuery q{*cfg.min_confidence};
    q.validate();
    return q;
}

void print_summary(std::ostream& out, const MineResult& result, std::size_t build_passes)
{
    out << "min_support: " << result.min_support << '\n';
    for (std::size_t k = 1; k <= result.max_level(); ++k)
        out << 'L' << k << ": " << result.level(k).size() << '\n';
    out << "frequent: " << result.total() << '\n';
    out << "raw_passes: " << build_passes + result.stats.raw_passes << " (build " << build_passes << ", mine "
        << result.stats.raw_passes << ")\n";
    out << "work_ops: " << result.stats.work_ops << '\n';
    out << "elapsed_ms: " << std::fixed << std::setprecision(3) << result.stats.elapsed_ms
        << std::defaultfloat << '\n';
}

struct Mined {
    MineResult result;
    Dictionary items;
    std::size_t build_passes = 0;
};

Mined mine_input(const RunConfig& cfg, const Database& db)
{
    const SupportThreshold& threshold = require_threshold(cfg);
    if (cfg.algo == Algo::apriori)
        return {mine_apriori(db, threshold), db.items(), 0};
    TradeList tl = TradeList::build(db);
    return {mine(tl, threshold, {cfg.threads}), tl.items(), tl.raw_passes()};
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
}

} // namespace

std::string format_frequent_log(const MineResult& result, const Dictionary& items)
{
    std::string out;
    std::size_t row = 0;
    for (const auto& level : result.levels) {
        for (const auto& f : level) {
            out += std::to_string(++row);
            out += '-';
            out += join_labels(f.itemset, items, ", ");
            out += '\n';
        }
    }
    return out;
}

std::string format_rule_log(const std::vector<Rule>& rules, const Dictionary& items)
{
    std::string out;
    for (const auto& r : rules) {
        out += join_labels(r.antecedent, items, ",");
        out += "->";
        out += join_labels(r.consequent, items, ",");
        out += " = ";
        out += format_percent(r.confidence);
        out += '\n';
    }
    return out;
}

std::string format_bench_csv(const BenchReport& report)
{
    std::ostringstream os;
    os << "algo,elapsed_ms,raw_passes,work_ops,n_frequent\n";
    for (const auto& row : report.rows) {
        os << row.algo << ',' << std::fixed << std::setprecision(3) << row.elapsed_ms << ',' << row.raw_passes
           << ',' << row.work_ops << ',' << row.n_frequent << '\n';
    }
    return os.str();
}

BenchReport run_bench(const Database& db, const SupportThreshold& threshold, unsigned repeat, unsigned threads)
{
    if (repeat < 1)
        throw Error("--repeat must be >= 1");

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::size_t n = v.size();
        return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
    };

    std::optional<MineResult> reference;
    auto check = [&](const MineResult& r, const char* algo) {
        if (!reference)
            reference = r;
        else if (!reference->same_itemsets(r))
            throw MismatchError(std::string("frequent itemsets from ") + algo + " disagree with the reference run");
    };

    std::vector<double> tl_times, ap_times;
    BenchRow tl_row{"tradelist"}, ap_row{"apriori"};
    for (unsigned rep = 0; rep < repeat; ++rep) {
        auto start = std::chrono::steady_clock::now();
        TradeList tl = TradeList::build(db);
        MineResult r = mine(tl, threshold, {threads});
        tl_times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        check(r, "tradelist");
        tl_row.raw_passes = tl.raw_passes() + r.stats.raw_passes;
        tl_row.work_ops = r.stats.work_ops;
        tl_row.n_frequent = r.total();

        MineResult a = mine_apriori(db, threshold);
        ap_times.push_back(a.stats.elapsed_ms);
        check(a, "apriori");
        ap_row.raw_passes = a.stats.raw_passes;
        ap_row.work_ops = a.stats.work_ops;
        ap_row.n_frequent = a.total();
    }
    tl_row.elapsed_ms = median(tl_times);
    ap_row.elapsed_ms = median(ap_times);

    if (tl_row.raw_passes != 1)
        throw MismatchError("trade-list pipeline made " + std::to_string(tl_row.raw_passes) + " raw passes, expected 1");
    if (ap_row.raw_passes < reference->max_level())
        throw MismatchError("apriori made fewer raw passes than its deepest level");

    return {{tl_row, ap_row}};
}

int cmd_tradelist(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Database db = load_input(cfg);
        TradeList tl = TradeList::build(db);
        auto path = log_path(cfg, "tradelist");
        write_file(path, tl.serialize_log());
        out << "items: " << tl.n_items() << '\n'
            << "transactions: " << tl.n_transactions() << '\n'
            << "raw_passes: " << tl.raw_passes() << '\n'
            << "log: " << path.string() << '\n';
        return kOk;
    });
}

int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Database db = load_input(cfg);
        Mined m = mine_input(cfg, db);
        auto path = log_path(cfg, "freq");
        write_file(path, format_frequent_log(m.result, m.items));
        print_summary(out, m.result, m.build_passes);
        out << "log: " << path.string() << '\n';
        return kOk;
    });
}

int cmd_rules(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        RuleQuery q = require_confidence(cfg);
        Database db = load_input(cfg);
        Mined m = mine_input(cfg, db);
        auto rules = generate_rules(m.result, q);
        auto path = log_path(cfg, "conf");
        write_file(path, format_rule_log(rules, m.items));
        print_summary(out, m.result, m.build_passes);
        out << "rules: " << rules.size() << '\n' << "log: " << path.string() << '\n';
        return kOk;
    });
}

int cmd_update(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (!cfg.update)
            throw Error("update needs --update FILE");
        const SupportThreshold& threshold = require_threshold(cfg);
        std::optional<RuleQuery> q;
        if (cfg.min_confidence)
            q = require_confidence(cfg);

        Database base = load_input(cfg);
        Database additions = parse_database(read_file(*cfg.update));

        TradeList tl = TradeList::build(base);
        const std::size_t passes_after_build = tl.raw_passes();
        tl.add_transactions(additions);
        MineResult result = remine(tl, threshold, {cfg.threads});
        if (tl.raw_passes() != passes_after_build || result.stats.raw_passes != 0)
            throw Error("incremental update rescanned the base database");

        write_file(log_path(cfg, "tradelist"), tl.serialize_log());
        write_file(log_path(cfg, "freq"), format_frequent_log(result, tl.items()));
        if (q)
            write_file(log_path(cfg, "conf"), format_rule_log(generate_rules(result, *q), tl.items()));

        out << "added: " << additions.size() << '\n' << "transactions: " << tl.n_transactions() << '\n';
        print_summary(out, result, tl.raw_passes());
        out << "extra_raw_passes: 0\n";
        return kOk;
    });
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Database db = load_input(cfg);
        BenchReport report = run_bench(db, require_threshold(cfg), cfg.repeat, cfg.threads);
        out << format_bench_csv(report);
        return kOk;
    });
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.command == "tradelist")
        return cmd_tradelist(cfg, out, err);
    if (cfg.command == "mine")
        return cmd_mine(cfg, out, err);
    if (cfg.command == "rules")
        return cmd_rules(cfg, out, err);
    if (cfg.command == "update")
        return cmd_update(cfg, out, err);
    if (cfg.command == "bench")
        return cmd_bench(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Frequent itemset and association rule mining over a trade-list index", "tlmine"};
    app.require_subcommand(1);

    std::string input, update, out_dir, synthetic, minconf, algo = "tradelist";
    std::uint64_t minsupp = 0;
    std::string minsupp_frac;
    unsigned threads = 1, repeat = 1;

    auto* opt_input = app.add_option("--input", input, "Transaction file (TID,item,item,...)");
    auto* opt_synth = app.add_option("--synthetic", synthetic, "Generate input: n_tx,n_items,mean,seed");
    opt_input->excludes(opt_synth);
    auto* opt_update = app.add_option("--update", update, "Transactions to add incrementally");
    auto* opt_minsupp = app.add_option("--minsupp", minsupp, "Minimum support count")->check(CLI::PositiveNumber);
    auto* opt_frac = app.add_option("--minsupp-frac", minsupp_frac, "Minimum support as a fraction in (0,1]");
    opt_minsupp->excludes(opt_frac);
    auto* opt_minconf = app.add_option("--minconf", minconf, "Minimum confidence: decimal (0.7) or percent (70%)");
    app.add_option("--algo", algo, "Miner for mine/rules")->check(CLI::IsMember({"tradelist", "apriori"}));
    auto* opt_out = app.add_option("--out", out_dir, "Write logs to this directory under fixed names");
    app.add_option("--threads", threads, "Miner worker threads")->check(CLI::PositiveNumber);
    app.add_option("--repeat", repeat, "Bench repetitions")->check(CLI::PositiveNumber);

    for (const char* name : {"tradelist", "mine", "rules", "update", "bench"})
        app.add_subcommand(name)->fallthrough();
    app.get_subcommand("tradelist")->description("Build the trade list and write its log");
    app.get_subcommand("mine")->description("Mine frequent itemsets");
    app.get_subcommand("rules")->description("Mine and generate association rules");
    app.get_subcommand("update")->description("Add transactions incrementally and re-mine");
    app.get_subcommand("bench")->description("Compare trade-list and Apriori miners (CSV)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (*opt_input)
            cfg.input = input;
        if (!synthetic.empty())
            cfg.synthetic = SyntheticSpec::parse(synthetic);
        if (*opt_update)
            cfg.update = update;
        if (*opt_minsupp)
            cfg.threshold = SupportThreshold::absolute(minsupp);
        if (*opt_frac)
            cfg.threshold = SupportThreshold::fraction(Ratio::parse(minsupp_frac));
        if (*opt_minconf)
            cfg.min_confidence = Ratio::parse(minconf);
        if (*opt_out)
            cfg.out_dir = out_dir;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    cfg.algo = algo == "apriori" ? Algo::apriori : Algo::tradelist;
    cfg.threads = threads;
    cfg.repeat = repeat;
    return run_command(cfg, out, err);
}

} // namespace tlmine::cli
