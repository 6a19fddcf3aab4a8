#include "hallforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "hallforge/bijection.hpp"
#include "hallforge/partition_sets.hpp"
#include "hallforge/qseries.hpp"
#include "hallforge/verify.hpp"

namespace hallforge::cli {

unsigned thread_limit() {
    const char* raw = std::getenv("HALLFORGE_THREADS");
    if (!raw) return std::max(1u, std::thread::hardware_concurrency());
    const std::string value(raw);
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("HALLFORGE_THREADS must be a positive integer, got '" + value + "'");
    const unsigned long n = std::stoul(value);
    if (n == 0) throw std::invalid_argument("HALLFORGE_THREADS must be a positive integer, got '" + value + "'");
    return static_cast<unsigned>(std::min<unsigned long>(n, 1024));
}

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyArgs {
    std::string identity;
    std::optional<Int> width;
    std::optional<Int> n_max;
    std::optional<Int> qmax;
    std::string format = "text";
};

struct EnumerateArgs {
    std::string set;
    Int width = 0;
    std::optional<Int> max_size;
    std::string format = "text";
};

struct MapArgs {
    Int width = 0;
    std::string parts;
    bool inverse = false;
    bool trace = false;
    std::string format = "text";
};

struct TableArgs {
    Int width = 0;
    std::optional<Int> max_size;
    std::string format = "text";
};

std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out += sep;
        out += std::to_string(v[j]);
    }
    return out;
}

std::string bracket(const std::vector<Int>& v) { return "[" + join_ints(v) + "]"; }

// ---- verify -------------------------------------------------------------

void print_report_text(const VerificationReport& r, std::ostream& out) {
    out << r.summary_line();
    const auto& d = r.details;
    if (r.identity == "thm2.1" && d.contains("value")) out << " value=" << d["value"].get<Int>();
    if (r.identity == "skip" && d.contains("multiset"))
        out << " multiset={" << join_ints(d["multiset"].get<std::vector<Int>>()) << "}";
    if (d.contains("window"))
        out << " window=q<=" << d["window"]["qmax"].get<Int>() << ",t<=" << d["window"]["tmax"].get<Int>();
    if (d.contains("rl_count") && r.identity == "rlhp") out << " count=" << d["rl_count"].get<Int>();
    out << '\n';
    if (d.contains("as_written")) {
        const auto& w = d["as_written"];
        out << "  as-written exponents {" << join_ints(w["exponents"].get<std::vector<Int>>()) << "}: "
            << (w["passed"].get<bool>() ? "PASS" : "FAIL");
        if (!w["counterexample"].is_null()) out << " first-counterexample: " << w["counterexample"].get<std::string>();
        out << '\n';
    }
    if (d.contains("trapezoid_alt_size")) {
        const auto& t = d["trapezoid_alt_size"];
        out << "  trapezoid alt size = N-k+1 on " << t["pairs_checked"].get<Int>()
            << " pairs: " << (t["equals_N_minus_k_plus_1"].get<bool>() ? "PASS" : "FAIL")
            << "; equals k on " << t["pairs_equal_to_k"].get<Int>() << '\n';
    }
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const bool range_by_n = a.identity == "thm2.1" || a.identity == "skip";
    std::optional<Int> bound = range_by_n ? (a.n_max ? a.n_max : a.width) : (a.width ? a.width : a.n_max);
    if (!bound) throw Usage(range_by_n ? "verify " + a.identity + " needs --n-max" : "verify " + a.identity + " needs --N");
    if (*bound < 1) throw Usage("upper bound must be >= 1");

    std::vector<VerifyRequest> requests;
    for (Int p = 1; p <= *bound; ++p) requests.push_back({a.identity, p, a.qmax});

    const unsigned threads = thread_limit();
    const auto start = std::chrono::steady_clock::now();
    const auto reports = verify_all(requests, threads);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    const bool all = passed == static_cast<std::ptrdiff_t>(reports.size());

    if (a.format == "json") {
        Json doc;
        doc["command"] = "verify";
        doc["identity"] = a.identity;
        doc["range"] = {{"from", 1}, {"to", *bound}};
        doc["qmax"] = a.qmax ? Json(*a.qmax) : Json(nullptr);
        doc["passed"] = all;
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        doc["reports"] = list;
        doc["metadata"] = {{"wall_time_ms", ms}, {"threads", threads}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) print_report_text(r, out);
        out << "summary: " << passed << "/" << reports.size() << " passed\n";
    }
    return all ? 0 : 1;
}

// ---- enumerate ----------------------------------------------------------

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const Family family = parse_family(a.set);
    std::vector<Partition> items;
    switch (family) {
    case Family::LectureHall:
    case Family::OddParty:
        if (!a.max_size) throw Usage("--set " + a.set + " is infinite; --max-size is required");
        items = family == Family::LectureHall ? enumerate_lh_up_to(a.width, *a.max_size)
                                              : enumerate_op_up_to(a.width, *a.max_size);
        break;
    case Family::ReducedLectureHall:
    case Family::ReducedOddParty:
        items = family == Family::ReducedLectureHall ? enumerate_reduced_lh(a.width) : enumerate_reduced_odd(a.width);
        if (a.max_size)
            std::erase_if(items, [&](const Partition& p) { return p.size() > *a.max_size; });
        break;
    }

    if (a.format == "json") {
        Json list = Json::array();
        for (const auto& p : items) list.push_back(to_json(p));
        out << list.dump(2) << '\n';
    } else if (a.format == "csv") {
        out << "parts,size,length,alt_size\n";
        for (const auto& p : items)
            out << '"' << format_partition(p) << "\"," << p.size() << ',' << p.length() << ',' << p.alt_size() << '\n';
    } else {
        for (const auto& p : items) out << display(p) << '\n';
    }
    return 0;
}

// ---- map ----------------------------------------------------------------

void print_trace_text(Int width, const std::vector<TraceStep>& steps, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"part", "i", "A", "I", "mu"});
    for (const auto& s : steps)
        rows.push_back({std::to_string(s.part), std::to_string(s.row), display(s.increment), bracket(s.counter),
                        display(s.image)});
    std::vector<std::size_t> widths(5, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    out << "N=" << width << '\n';
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size()) cell.resize(widths[c], ' ');
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        out << line << '\n';
    }
}

Json trace_json(const std::vector<TraceStep>& steps) {
    Json list = Json::array();
    for (const auto& s : steps) {
        list.push_back({{"part", s.part},
                        {"k", s.k},
                        {"i", s.row},
                        {"A", s.increment.entries},
                        {"I", s.counter},
                        {"d", s.actions},
                        {"mu", s.image.parts()}});
    }
    return list;
}

int run_map(const MapArgs& a, std::ostream& out) {
    const Partition input = parse_partition(a.parts);
    const Partition lambda = a.inverse ? phi_inverse(a.width, input) : input;
    const Partition mu = a.inverse ? input : phi(a.width, input);
    const auto steps = trace(a.width, lambda);
    const GrowthState final_state = run_growth(a.width, lambda);

    if (a.format == "json") {
        Json doc;
        doc["N"] = a.width;
        doc["direction"] = a.inverse ? "inverse" : "forward";
        doc["lambda"] = to_json(lambda);
        doc["lambda_multiplicities"] = format_multiplicities(lambda);
        doc["mu"] = to_json(mu);
        doc["I"] = final_state.counter;
        doc["d"] = final_state.actions;
        if (a.trace) doc["trace"] = trace_json(steps);
        out << doc.dump(2) << '\n';
        return 0;
    }

    if (a.trace) print_trace_text(a.width, steps, out);
    out << "I=" << bracket(final_state.counter) << '\n';
    out << "d=" << bracket(final_state.actions) << '\n';
    if (a.inverse) {
        out << "mu=" << display(mu) << '\n';
        out << "lambda=" << display(lambda) << " = " << format_multiplicities(lambda) << '\n';
    } else {
        out << "lambda=" << display(lambda) << " = " << format_multiplicities(lambda) << '\n';
        out << "mu=" << display(mu) << '\n';
    }
    return 0;
}

// ---- table --------------------------------------------------------------

int run_table(const TableArgs& a, std::ostream& out) {
    if (a.width < 1 || a.width > 7) throw Usage("table needs 1 <= --N <= 7");
    bool consistent = true;
    Json doc = Json::array();
    for (Int n = 1; n <= a.width; ++n) {
        const Int degree = reduced_max_size(n);
        const Int rows = std::max(degree, a.max_size.value_or(0));
        std::vector<Int> rl(static_cast<std::size_t>(rows + 1)), rop(rl.size()), l(rl.size()), op(rl.size());
        for (const auto& p : enumerate_reduced_lh(n)) ++rl[static_cast<std::size_t>(p.size())];
        for (const auto& p : enumerate_reduced_odd(n)) ++rop[static_cast<std::size_t>(p.size())];
        if (a.max_size) {
            for (const auto& p : enumerate_lh_up_to(n, *a.max_size)) ++l[static_cast<std::size_t>(p.size())];
            for (const auto& p : enumerate_op_up_to(n, *a.max_size)) ++op[static_cast<std::size_t>(p.size())];
        }
        Int rl_total = 0, rop_total = 0;
        Json entry;
        entry["N"] = n;
        Json table_rows = Json::array();
        if (a.format != "json") {
            out << "N=" << n << '\n';
            out << std::setw(4) << "n" << std::setw(8) << "RL" << std::setw(8) << "ROP";
            if (a.max_size) out << std::setw(10) << "L" << std::setw(10) << "OP";
            out << '\n';
        }
        for (Int s = 0; s <= rows; ++s) {
            const auto j = static_cast<std::size_t>(s);
            rl_total += rl[j];
            rop_total += rop[j];
            if (rl[j] != rop[j]) consistent = false;
            const bool with_truncated = a.max_size && s <= *a.max_size;
            if (with_truncated && l[j] != op[j]) consistent = false;
            Json row = {{"n", s}, {"RL", rl[j]}, {"ROP", rop[j]}};
            if (with_truncated) {
                row["L"] = l[j];
                row["OP"] = op[j];
            }
            table_rows.push_back(row);
            if (a.format != "json") {
                out << std::setw(4) << s << std::setw(8) << rl[j] << std::setw(8) << rop[j];
                if (with_truncated) out << std::setw(10) << l[j] << std::setw(10) << op[j];
                out << '\n';
            }
        }
        if (a.format != "json") out << "total" << std::setw(7) << rl_total << std::setw(8) << rop_total << '\n';
        entry["rows"] = table_rows;
        entry["total"] = {{"RL", rl_total}, {"ROP", rop_total}};
        doc.push_back(entry);
    }
    if (a.format == "json") out << doc.dump(2) << '\n';
    return consistent ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lecture hall partitions: enumeration, the odd-part bijection, and identity checks", "hallforge"};
    app.require_subcommand(1, 1);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a parameter range");
    verify_cmd->add_option("identity", va.identity, "Identity name")->required()->check(CLI::IsMember(identity_names()));
    verify_cmd->add_option("--N", va.width, "Largest width (checks 1..N)");
    verify_cmd->add_option("--n-max", va.n_max, "Largest n for thm2.1 and skip");
    verify_cmd->add_option("--qmax", va.qmax, "Truncation order in q (size bound for bijection)");
    verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

    EnumerateArgs ea;
    auto* enum_cmd = app.add_subcommand("enumerate", "List a partition family in canonical order");
    enum_cmd->add_option("--set", ea.set)->required()->check(CLI::IsMember({"l", "rl", "op", "rop"}));
    enum_cmd->add_option("--N", ea.width)->required();
    enum_cmd->add_option("--max-size", ea.max_size);
    enum_cmd->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json", "csv"}));

    MapArgs ma;
    auto* map_cmd = app.add_subcommand("map", "Apply phi_N (or its inverse) to one partition");
    map_cmd->add_option("--N", ma.width)->required();
    map_cmd->add_option("--parts", ma.parts, "\"11,9,7\" or \"1^4 3^2 7^3 9 11\"")->required();
    map_cmd->add_flag("--inverse", ma.inverse);
    map_cmd->add_flag("--trace", ma.trace);
    map_cmd->add_option("--format", ma.format)->check(CLI::IsMember({"text", "json"}));

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Counts of RL_N and ROP_N by size");
    table_cmd->add_option("--N", ta.width)->required();
    table_cmd->add_option("--max-size", ta.max_size);
    table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*verify_cmd) return run_verify(va, out);
        if (*enum_cmd) return run_enumerate(ea, out);
        if (*map_cmd) return run_map(ma, out);
        if (*table_cmd) return run_table(ta, out);
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool internal = e.kind() == ErrorKind::CounterUnderflow || e.kind() == ErrorKind::TableMiss;
        return internal ? 1 : 2;
    }
    return 2;
}

}  // namespace hallforge::cli
