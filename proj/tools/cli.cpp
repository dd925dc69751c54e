#include "cli.hpp"

#include "report_json.hpp"

#include <repcount/counting.hpp>
#include <repcount/extrema.hpp>
#include <repcount/identities.hpp>
#include <repcount/oracle.hpp>
#include <repcount/pattern.hpp>
#include <repcount/scan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace repcount::cli {

namespace {

using nlohmann::json;

struct GlobalFlags {
    std::size_t budget = kDefaultBudget;
    unsigned workers = 1;
    long long memo_cap = -1;
    bool json = false;

    ScanOptions scan() const {
        ScanOptions options;
        options.budget = budget;
        options.workers = workers;
        options.memo_capacity =
            memo_cap < 0 ? MemoCache::kUnbounded : static_cast<std::size_t>(memo_cap);
        return options;
    }
};

struct CountFlags {
    int base = 4;
    std::string kind = "hyper";
    std::string n;
};

Interval parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw DomainError("range must look like A..B, got '" + text + "'");
    }
    return {parse_value(text.substr(0, dots)), parse_value(text.substr(dots + 2))};
}

CountKind parse_kind(const std::string& kind) {
    return kind == "balanced" ? CountKind::Balanced : CountKind::Hyper;
}

Alphabet alphabet_for(CountKind kind) {
    return kind == CountKind::Balanced ? Alphabet::balanced() : Alphabet::hyper();
}

Integer checked_argument(const CountFlags& flags) {
    Integer n = parse_value(flags.n);
    if (parse_kind(flags.kind) == CountKind::Hyper && n < 0) {
        throw DomainError("hyper counts need n >= 0, got " + to_string(n));
    }
    return n;
}

int cmd_count(const CountFlags& flags, const GlobalFlags& global, std::ostream& out) {
    const Integer n = checked_argument(flags);
    MemoCache cache(flags.base, global.scan().memo_capacity);
    const Count value = count(parse_kind(flags.kind), n, cache);
    if (global.json) {
        out << json{{"base", flags.base},
                    {"kind", flags.kind},
                    {"n", to_string(n)},
                    {"count", to_string(value)}}
            << '\n';
    } else {
        out << value << '\n';
    }
    return kOk;
}

int cmd_enumerate(const CountFlags& flags, const GlobalFlags& global, std::ostream& out) {
    const Integer n = checked_argument(flags);
    const auto reps = enumerate_reps(n, flags.base, alphabet_for(parse_kind(flags.kind)));
    if (global.json) {
        auto list = json::array();
        for (const auto& rep : reps) {
            list.push_back(to_pattern_string(rep));
        }
        out << list << '\n';
    } else {
        for (const auto& rep : reps) {
            out << to_pattern_string(rep) << '\n';
        }
    }
    return kOk;
}

int cmd_normalize(const std::string& pattern, const GlobalFlags& global, std::ostream& out) {
    const DigitVec input = expand(parse_pattern(pattern));
    const DigitVec output = normalize_balanced(input).canonical();
    if (global.json) {
        out << json{{"input", to_pattern_string(input)},
                    {"output", to_pattern_string(output)},
                    {"value", to_string(eval(output))}}
            << '\n';
    } else {
        out << to_pattern_string(output) << '\n';
    }
    return kOk;
}

int cmd_verify_shift(int base, unsigned j, const GlobalFlags& global, std::ostream& out) {
    const ShiftReport report = verify_shift_interval(j, base, global.scan());
    if (global.json) {
        out << to_json(report) << '\n';
    } else {
        out << "shift base=" << base << " j=" << j << " interval=[" << report.interval.lo()
            << ", " << report.interval.hi() << "]\n"
            << "zero_on_interval: " << (report.zero_on_interval ? "true" : "false") << '\n'
            << "left_boundary: " << report.left_boundary_value
            << " at n=" << report.interval.lo() - 1 << '\n'
            << "right_boundary: " << report.right_boundary_value
            << " at n=" << report.interval.hi() + 1 << '\n';
        for (const auto& [n, value] : report.failures) {
            out << "violation: n=" << n << " D=" << value << '\n';
        }
    }
    return report.holds() ? kOk : kViolation;
}

void print_max_report(const MaxReport& report, const GlobalFlags& global, std::ostream& out) {
    if (global.json) {
        out << to_json(report) << '\n';
        return;
    }
    out << "interval=[" << report.interval.lo() << ", " << report.interval.hi() << "]\n"
        << "max: " << report.max_value << " (predicted " << report.predicted_value << ")\n"
        << "first_argmax: " << report.first_argmax << '\n'
        << "predicted_argmax: " << report.predicted_argmax << '\n'
        << "agree: " << (report.agree ? "true" : "false") << '\n';
}

int cmd_verify_hyper_maxima(int base, unsigned k, const GlobalFlags& global, std::ostream& out) {
    const MaxReport report = verify_hyper_maxima(k, base, global.scan());
    print_max_report(report, global, out);
    const bool ok = report.agree && report.first_argmax_matches();
    if (!ok && !global.json) {
        out << "violation: n=" << report.first_argmax << " value=" << report.max_value << '\n';
    }
    return ok ? kOk : kViolation;
}

int cmd_verify_balanced_maxima(unsigned r, const GlobalFlags& global, std::ostream& out) {
    const MaxReport report = verify_balanced_maxima(r, global.scan());
    print_max_report(report, global, out);
    if (!report.agree && !global.json) {
        out << "violation: n=" << report.first_argmax << " value=" << report.max_value << '\n';
    }
    return report.agree ? kOk : kViolation;
}

struct OracleMismatch {
    Integer n;
    CountKind kind;
    Count recurrence;
    Count enumeration;
};

int cmd_verify_oracle(int base, const std::string& range_text, const GlobalFlags& global,
                      std::ostream& out) {
    const BaseParams params(base);
    if (!params.even()) {
        throw DomainError("oracle check needs an even base, got " + std::to_string(base));
    }
    const bool balanced = base >= 4;
    const Interval range = parse_range(range_text);
    require_budget(range.size(), global.budget);

    const auto pieces = run_partitioned(
        range, params, global.scan(), [&](const Interval& piece, MemoCache& cache) {
            std::vector<OracleMismatch> bad;
            for (Integer n = piece.lo(); n <= piece.hi(); ++n) {
                if (n >= 0) {
                    Count rec = hyper_count(n, cache);
                    Count enumerated = count_via_enumeration(n, base, Alphabet::hyper());
                    if (rec != enumerated) {
                        bad.push_back({n, CountKind::Hyper, rec, enumerated});
                    }
                }
                if (balanced) {
                    Count rec = balanced_count(n, cache);
                    Count enumerated = count_via_enumeration(n, base, Alphabet::balanced());
                    if (rec != enumerated) {
                        bad.push_back({n, CountKind::Balanced, rec, enumerated});
                    }
                }
            }
            return bad;
        });

    std::vector<OracleMismatch> mismatches;
    for (const auto& piece : pieces) {
        mismatches.insert(mismatches.end(), piece.begin(), piece.end());
    }

    if (global.json) {
        auto list = json::array();
        for (const auto& m : mismatches) {
            list.push_back({to_string(m.n), to_string(m.kind), to_string(m.recurrence),
                            to_string(m.enumeration)});
        }
        out << json{{"base", base},
                    {"range", to_json(range)},
                    {"checked", to_string(range.size())},
                    {"mismatches", std::move(list)}}
            << '\n';
    } else {
        out << "oracle base=" << base << " range=[" << range.lo() << ", " << range.hi()
            << "] checked=" << range.size() << " mismatches=" << mismatches.size() << '\n';
        for (const auto& m : mismatches) {
            out << "violation: n=" << m.n << " kind=" << to_string(m.kind)
                << " recurrence=" << m.recurrence << " enumeration=" << m.enumeration << '\n';
        }
    }
    return mismatches.empty() ? kOk : kViolation;
}

struct ScanFlags {
    int base = 4;
    std::string kind = "hyper";
    unsigned j = 0;
    std::string range;
    std::string format = "csv";
};

int cmd_scan(const ScanFlags& flags, const GlobalFlags& global, std::ostream& out) {
    const Interval range = parse_range(flags.range);
    require_budget(range.size(), global.budget);

    std::function<Integer(const Integer&, MemoCache&)> value_of;
    if (flags.kind == "D") {
        if (flags.j < 1) {
            throw DomainError("scan --kind D needs --j >= 1");
        }
        BaseParams::balanced(flags.base);
        value_of = [j = flags.j](const Integer& n, MemoCache& cache) {
            return shift_difference(j, n, cache);
        };
    } else {
        const CountKind kind = parse_kind(flags.kind);
        if (kind == CountKind::Hyper && range.lo() < 0) {
            throw DomainError("hyper counts need n >= 0, range starts at " +
                              to_string(range.lo()));
        }
        value_of = [kind](const Integer& n, MemoCache& cache) { return count(kind, n, cache); };
    }

    const auto pieces = run_partitioned(
        range, BaseParams(flags.base), global.scan(),
        [&](const Interval& piece, MemoCache& cache) {
            std::vector<Integer> values;
            for (Integer n = piece.lo(); n <= piece.hi(); ++n) {
                values.push_back(value_of(n, cache));
            }
            return values;
        });

    if (flags.format == "json") {
        auto rows = json::array();
        Integer n = range.lo();
        for (const auto& piece : pieces) {
            for (const auto& value : piece) {
                rows.push_back({{"n", to_string(n)}, {"value", to_string(value)}});
                ++n;
            }
        }
        out << rows << '\n';
    } else {
        out << "n,value\r\n";
        Integer n = range.lo();
        for (const auto& piece : pieces) {
            for (const auto& value : piece) {
                out << n << ',' << value << "\r\n";
                ++n;
            }
        }
    }
    return kOk;
}

void add_count_flags(CLI::App& cmd, CountFlags& flags) {
    cmd.add_option("--base", flags.base, "radix d")->required();
    cmd.add_option("--kind", flags.kind, "hyper or balanced")
        ->check(CLI::IsMember({"hyper", "balanced"}));
    cmd.add_option("--n", flags.n, "integer or pattern such as \"[1 2 1]_4\"")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts hyper-d-ary and balanced d-ary representations"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags global;
    app.add_option("--budget", global.budget, "maximum number of evaluated points");
    app.add_option("--workers", global.workers, "threads for interval scans")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--memo-cap", global.memo_cap, "memo entries to keep; 0 disables")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--json", global.json, "machine-readable output");

    std::function<int()> action;

    CountFlags count_flags;
    auto* count_cmd = app.add_subcommand("count", "print the number of representations of n");
    add_count_flags(*count_cmd, count_flags);
    count_cmd->callback([&] { action = [&] { return cmd_count(count_flags, global, out); }; });

    CountFlags enum_flags;
    auto* enum_cmd = app.add_subcommand("enumerate", "list every representation of n");
    add_count_flags(*enum_cmd, enum_flags);
    enum_cmd->callback([&] { action = [&] { return cmd_enumerate(enum_flags, global, out); }; });

    std::string pattern;
    auto* norm_cmd = app.add_subcommand("normalize", "rewrite a balanced pattern without -d/2");
    norm_cmd->add_option("--pattern", pattern, "balanced pattern such as \"[-1 -2]_4\"")
        ->required();
    norm_cmd->callback([&] { action = [&] { return cmd_normalize(pattern, global, out); }; });

    auto* verify_cmd = app.add_subcommand("verify", "check a predicted property over a range");
    verify_cmd->require_subcommand(1);

    int shift_base = 4;
    unsigned shift_j = 1;
    auto* shift_cmd = verify_cmd->add_subcommand("shift", "zero interval of the shifted difference");
    shift_cmd->add_option("--base", shift_base, "even radix >= 4");
    shift_cmd->add_option("--j", shift_j, "shift length")->required()->check(CLI::PositiveNumber);
    shift_cmd->callback(
        [&] { action = [&] { return cmd_verify_shift(shift_base, shift_j, global, out); }; });

    int hyper_base = 4;
    unsigned hyper_k = 3;
    auto* hmax_cmd = verify_cmd->add_subcommand("maxima-hyper", "Fibonacci maxima of f_d");
    hmax_cmd->add_option("--base", hyper_base, "radix");
    hmax_cmd->add_option("--k", hyper_k, "interval index, >= 3")->required();
    hmax_cmd->callback([&] {
        action = [&] { return cmd_verify_hyper_maxima(hyper_base, hyper_k, global, out); };
    });

    unsigned balanced_r = 1;
    auto* bmax_cmd = verify_cmd->add_subcommand("maxima-balanced", "Fibonacci maxima of b_4");
    bmax_cmd->add_option("--r", balanced_r, "interval index, >= 1")->required();
    bmax_cmd->callback(
        [&] { action = [&] { return cmd_verify_balanced_maxima(balanced_r, global, out); }; });

    int oracle_base = 4;
    std::string oracle_range;
    auto* oracle_cmd =
        verify_cmd->add_subcommand("oracle", "recurrences against brute-force enumeration");
    oracle_cmd->add_option("--base", oracle_base, "even radix");
    oracle_cmd->add_option("--range", oracle_range, "A..B")->required();
    oracle_cmd->callback([&] {
        action = [&] { return cmd_verify_oracle(oracle_base, oracle_range, global, out); };
    });

    ScanFlags scan_flags;
    auto* scan_cmd = app.add_subcommand("scan", "tabulate a function over a range");
    scan_cmd->add_option("--base", scan_flags.base, "radix");
    scan_cmd->add_option("--kind", scan_flags.kind, "hyper, balanced or D")
        ->check(CLI::IsMember({"hyper", "balanced", "D"}));
    scan_cmd->add_option("--j", scan_flags.j, "shift length for --kind D");
    scan_cmd->add_option("--range", scan_flags.range, "A..B")->required();
    scan_cmd->add_option("--format", scan_flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->callback([&] { action = [&] { return cmd_scan(scan_flags, global, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action();
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kViolation;
    }
}

}  // namespace repcount::cli
