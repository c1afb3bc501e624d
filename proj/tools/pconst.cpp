// pconst: build character tables, classify p-constant characters, run the
// verification suites and scan parameter ranges.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include "pconst/builtin_tables.hpp"
#include "pconst/char_table.hpp"
#include "pconst/dihedral.hpp"
#include "pconst/frobenius.hpp"
#include "pconst/monomial.hpp"
#include "pconst/suites.hpp"
#include "pconst/symmetric.hpp"
#include "pconst/table_io.hpp"
#include "pconst/type_d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <omp.h>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef PCONST_DATA_DIR
#define PCONST_DATA_DIR "data"
#endif

namespace {

using namespace pconst;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = -1;
    std::vector<std::uint64_t> primes;
    std::string range;
    std::string format = "md";
    int jobs = 0;
    std::vector<std::string> h_tables;
    std::string table_path;
    unsigned gp = 0;
    std::string spec_path;
    std::string m_range;
    std::string families;
    std::string primes_list;
    std::string output;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

CharTable load_h_table(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_table(spec.substr(8));
    return load_table(spec);
}

std::vector<unsigned> parse_prime_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !is_prime(p)) throw std::invalid_argument("bad prime \"" + item + "\"");
        out.push_back(static_cast<unsigned>(p));
    }
    if (out.empty()) throw std::invalid_argument("no primes given");
    return out;
}

void require_n(const Options& o, const std::string& family) {
    if (o.n < 0) throw std::invalid_argument(family + " needs -n");
}

CharTable classify_table(const std::string& family, const Options& o) {
    if (family == "sym" || family == "bn" || family == "dn" || family == "i2") {
        require_n(o, family);
        return family_table(family, o.n);
    }
    if (family == "wreath") {
        require_n(o, family);
        if (o.h_tables.size() != 1) throw std::invalid_argument("wreath needs exactly one --h-table");
        return wreath_char_table(load_h_table(o.h_tables.front()), o.n);
    }
    if (family == "frobenius") {
        if (o.gp != 0 && !o.spec_path.empty()) throw std::invalid_argument("give either --gp or --spec");
        if (o.gp != 0) return frobenius_table(build_Gp(o.gp));
        if (!o.spec_path.empty()) return frobenius_table(load_frobenius_spec(o.spec_path));
        throw std::invalid_argument("frobenius needs --gp p or --spec path");
    }
    if (family == "table") {
        if (o.table_path.empty()) throw std::invalid_argument("table needs --table path");
        return load_table(o.table_path);
    }
    throw std::invalid_argument("unknown family \"" + family + "\"");
}

std::vector<std::uint64_t> primes_for(const CharTable& t, const Options& o) {
    if (o.primes.empty()) return prime_divisors(t.order);
    for (auto p : o.primes)
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return o.primes;
}

int cmd_classify(const std::string& family, const Options& o) {
    const CharTable t = classify_table(family, o);
    const auto primes = primes_for(t, o);
    json all = json::array();
    std::ostringstream out;
    if (o.format == "csv") out << "group,p,index,character,degree,defect,verdict,c,member\n";
    for (auto p : primes) {
        const auto reports = upsilon_p(t, p);
        const auto singular = p_singular_classes(t, p);
        if (o.format == "json") {
            json rows = json::array();
            for (const auto& r : reports)
                rows.push_back({{"index", r.index},
                                {"character", r.label},
                                {"degree", r.degree.get_str()},
                                {"defect", r.p_defect},
                                {"verdict", verdict_name(r.verdict)},
                                {"c", r.constant ? json(r.constant->get_str()) : json(nullptr)},
                                {"member", r.in_upsilon()}});
            all.push_back({{"group", t.name},
                           {"order", t.order.get_str()},
                           {"p", p},
                           {"singular_classes", singular.indices.size()},
                           {"reports", rows}});
        } else if (o.format == "csv") {
            for (const auto& r : reports)
                out << csv_field(t.name) << ',' << p << ',' << r.index << ',' << csv_field(r.label) << ',' << r.degree.get_str()
                    << ',' << r.p_defect << ',' << verdict_name(r.verdict) << ',' << (r.constant ? r.constant->get_str() : "")
                    << ',' << (r.in_upsilon() ? 1 : 0) << '\n';
        } else {
            std::size_t members = 0;
            for (const auto& r : reports) members += r.in_upsilon() ? 1 : 0;
            out << "## " << t.name << ", p = " << p << "\n\n"
                << "|G| = " << t.order.get_str() << ", " << singular.indices.size() << " p-singular classes, "
                << members << " members of Upsilon_p\n\n"
                << "| # | character | degree | defect | verdict | c | member |\n"
                << "|---|---|---|---|---|---|---|\n";
            for (const auto& r : reports)
                out << "| " << r.index << " | " << r.label << " | " << r.degree.get_str() << " | " << r.p_defect << " | "
                    << verdict_name(r.verdict) << " | " << (r.constant ? r.constant->get_str() : "") << " | "
                    << (r.in_upsilon() ? "yes" : "") << " |\n";
            out << '\n';
        }
    }
    if (o.format == "json") out << all.dump(1) << '\n';
    std::cout << out.str();
    return kExitOk;
}

struct SuiteDef {
    std::string name;
    std::string what;
    std::function<SuiteResult(const Options&)> run;
};

IntRange range_or(const std::string& text, IntRange fallback) { return text.empty() ? fallback : parse_range(text); }

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> defs{
        {"an", "type A classification, --m a..b (default 3..12)",
         [](const Options& o) { return suite_an(range_or(!o.m_range.empty() ? o.m_range : o.range, {3, 12})); }},
        {"bn", "type B corollary, --range a..b (default 2..8)",
         [](const Options& o) { return suite_bn(range_or(o.range, {2, 8})); }},
        {"dn", "type D proposition, --range a..b (default 4..8)",
         [](const Options& o) { return suite_dn(range_or(o.range, {4, 8})); }},
        {"i2", "dihedral proposition, --range a..b (default 3..60)",
         [](const Options& o) { return suite_i2(range_or(o.range, {3, 60})); }},
        {"thwr", "wreath theorem, --h-table ... (default C2 C3 C4 C2xC2 Sym3), --range a..b (default 2..5)",
         [](const Options& o) {
             std::vector<CharTable> hs;
             if (o.h_tables.empty())
                 for (const char* name : {"C2", "C3", "C4", "C2xC2", "Sym3"}) hs.push_back(builtin_table(name));
             for (const auto& h : o.h_tables) hs.push_back(load_h_table(h));
             return suite_thwr(hs, range_or(o.range, {2, 5}));
         }},
        {"th2", "Upsilon_2 characterization, --families (default sym:3..8,bn:2..6,dn:4..7,i2:3..41)",
         [](const Options& o) {
             return suite_th2(parse_families(o.families.empty() ? "sym:3..8,bn:2..6,dn:4..7,i2:3..41" : o.families));
         }},
        {"directprod", "direct products, p-groups, linear characters", [](const Options&) { return suite_directprod(); }},
        {"q8", "V x| Q8 lemma, --primes (default 3,5,7,11,13)",
         [](const Options& o) { return suite_q8(parse_prime_list(o.primes_list.empty() ? "3,5,7,11,13" : o.primes_list)); }},
        {"example-sl25", "SL2(5) x| F11^2 example, --spec (default shipped data file)",
         [](const Options& o) {
             return suite_example(o.spec_path.empty() ? std::string(PCONST_DATA_DIR) + "/sl2_5_f11.json" : o.spec_path, "14520");
         }},
    };
    return defs;
}

int cmd_verify(const std::string& name, const Options& o) {
    const auto& defs = suites();
    auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.name == name; });
    if (it == defs.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
    const SuiteResult res = it->run(o);
    std::ostringstream out;
    if (o.format == "json") {
        json checks = json::array();
        for (const auto& c : res.checks) checks.push_back({{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}});
        out << json{{"suite", res.suite}, {"ok", res.ok()}, {"failures", res.failures()}, {"checks", checks}}.dump(1) << '\n';
    } else if (o.format == "csv") {
        out << "suite,check,status,detail\n";
        for (const auto& c : res.checks)
            out << res.suite << ',' << csv_field(c.id) << ',' << (c.ok ? "pass" : "FAIL") << ',' << csv_field(c.detail) << '\n';
    } else {
        out << "## verify " << res.suite << "\n\n| status | check | detail |\n|---|---|---|\n";
        for (const auto& c : res.checks) out << "| " << (c.ok ? "pass" : "FAIL") << " | " << c.id << " | " << c.detail << " |\n";
        out << "\n" << res.checks.size() - res.failures() << "/" << res.checks.size() << " checks passed\n";
    }
    std::cout << out.str();
    return res.ok() ? kExitOk : kExitMismatch;
}

int cmd_scan(std::string family, const Options& o) {
    if (family == "frobenius") family = "gp";
    if (o.range.empty()) throw std::invalid_argument("scan needs --range a..b");
    const IntRange r = parse_range(o.range);
    std::vector<ScanRow> rows;
    for (int n = r.lo; n <= r.hi; ++n) {
        if (family == "gp" && (n < 3 || !is_prime(static_cast<std::uint64_t>(n)))) continue;
        CharTable t;
        if (family == "wreath") {
            if (o.h_tables.size() != 1) throw std::invalid_argument("wreath needs exactly one --h-table");
            t = wreath_char_table(load_h_table(o.h_tables.front()), n);
        } else {
            t = family_table(family, n);
        }
        for (auto& row : scan_table(t)) rows.push_back(std::move(row));
    }
    std::size_t flagged = 0;
    std::ostringstream out;
    if (o.format == "json") {
        json all = json::array();
        for (const auto& x : rows) {
            all.push_back({{"group", x.group}, {"p", x.p}, {"character", x.character}, {"degree", x.degree.get_str()},
                           {"c", x.constant.get_str()}, {"flagged", x.flagged}});
            flagged += x.flagged;
        }
        out << all.dump(1) << '\n';
    } else {
        out << "group,p,character,degree,c,flagged\n";
        for (const auto& x : rows) {
            out << csv_field(x.group) << ',' << x.p << ',' << csv_field(x.character) << ',' << x.degree.get_str() << ','
                << x.constant.get_str() << ',' << (x.flagged ? 1 : 0) << '\n';
            flagged += x.flagged;
        }
    }
    std::cout << out.str();
    std::cerr << rows.size() << " members, " << flagged << " with |c| > 1\n";
    return kExitOk;
}

int cmd_table(const std::string& family, const Options& o) {
    const CharTable t = classify_table(family, o);
    if (o.output.empty()) {
        std::cout << table_to_json(t).dump(1) << '\n';
    } else {
        save_table(t, o.output);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pconst: exact character tables and p-constant characters"};
    app.require_subcommand(1);
    Options o;
    std::string family, suite;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    };

    auto* classify = app.add_subcommand("classify", "Classify the p-constant characters of one group");
    classify->add_option("family", family, "sym | bn | dn | i2 | wreath | frobenius | table")
        ->required()
        ->check(CLI::IsMember({"sym", "bn", "dn", "i2", "wreath", "frobenius", "table"}));
    classify->add_option("-n,--degree", o.n, "Family parameter");
    classify->add_option("-p,--prime", o.primes, "Prime(s); default every prime dividing |G|");
    classify->add_option("--h-table", o.h_tables, "Base table for wreath: path or builtin:NAME");
    classify->add_option("--table", o.table_path, "Table JSON file");
    classify->add_option("--gp", o.gp, "Build G(p) = F_p^2 x| Q8");
    classify->add_option("--spec", o.spec_path, "Frobenius spec JSON file");
    add_common(classify);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suite_names;
    for (const auto& d : suites()) suite_names.push_back(d.name);
    verify->add_option("suite", suite, "an | bn | dn | i2 | thwr | th2 | directprod | q8 | example-sl25")
        ->required()
        ->check(CLI::IsMember(suite_names));
    verify->add_option("--range", o.range, "Parameter range a..b");
    verify->add_option("--m", o.m_range, "Range of m for the type A suite");
    verify->add_option("--families", o.families, "Families for th2, e.g. sym:3..8,i2:3..41");
    verify->add_option("--primes", o.primes_list, "Comma separated primes for q8");
    verify->add_option("--h-table", o.h_tables, "Base tables for thwr: path or builtin:NAME");
    verify->add_option("--spec", o.spec_path, "Frobenius spec JSON for example-sl25");
    add_common(verify);

    auto* scan = app.add_subcommand("scan", "List every Upsilon_p member over a parameter range; flags |c| > 1");
    scan->add_option("family", family, "sym | bn | dn | i2 | gp (frobenius) | wreath")
        ->required()
        ->check(CLI::IsMember({"sym", "bn", "dn", "i2", "gp", "frobenius", "wreath"}));
    scan->add_option("--range", o.range, "Parameter range a..b")->required();
    scan->add_option("--h-table", o.h_tables, "Base table for wreath: path or builtin:NAME");
    add_common(scan);

    auto* table = app.add_subcommand("table", "Export a character table as JSON");
    table->add_option("family", family, "sym | bn | dn | i2 | wreath | frobenius | table")
        ->required()
        ->check(CLI::IsMember({"sym", "bn", "dn", "i2", "wreath", "frobenius", "table"}));
    table->add_option("-n,--degree", o.n, "Family parameter");
    table->add_option("--h-table", o.h_tables, "Base table for wreath: path or builtin:NAME");
    table->add_option("--table", o.table_path, "Table JSON file");
    table->add_option("--gp", o.gp, "Build G(p) = F_p^2 x| Q8");
    table->add_option("--spec", o.spec_path, "Frobenius spec JSON file");
    table->add_option("-o,--output", o.output, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (scan->parsed() && scan->count("--format") == 0) o.format = "csv";
    if (o.jobs > 0) omp_set_num_threads(o.jobs);

    try {
        if (classify->parsed()) return cmd_classify(family, o);
        if (verify->parsed()) return cmd_verify(suite, o);
        if (scan->parsed()) return cmd_scan(family, o);
        return cmd_table(family, o);
    } catch (const std::logic_error& e) {
        // invalid_argument derives from logic_error: bad input
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
