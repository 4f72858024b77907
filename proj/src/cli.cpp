#include "gatree/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gatree/enumerate.hpp"
#include "gatree/errors.hpp"
#include "gatree/stab.hpp"

namespace gatree {

using json = nlohmann::json;

std::string export_tree(const GaTree& tree, const std::string& format) {
    if (format == "json") return tree_to_json(tree);
    if (format == "dot") return tree_to_dot(tree);
    throw std::invalid_argument("unknown export format '" + format + "'");
}

namespace {

StratumType::Space space_of(const std::string& tag) {
    return tag == "P" ? StratumType::Space::P : StratumType::Space::L;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each writes complete output to `os` and returns the
// exit code; errors propagate as exceptions and are mapped by run_cli.
// ---------------------------------------------------------------------------

int cmd_euler(const CommandConfig& cfg, std::ostream& os) {
    os << total_chi(space_of(cfg.space), cfg.n) << "\n";
    return 0;
}

int cmd_table(const CommandConfig& cfg, std::ostream& os) {
    os << "space";
    for (int k = 1; k <= cfg.max_n; ++k) os << "," << k;
    os << "\n";
    for (const char* tag : {"P", "L"}) {
        os << tag;
        for (int k = 1; k <= cfg.max_n; ++k) os << "," << total_chi(space_of(tag), k);
        os << "\n";
    }
    return 0;
}

int cmd_epoly(const CommandConfig& cfg, std::ostream& os) {
    os << total_epoly(space_of(cfg.space), cfg.n).to_string() << "\n";
    return 0;
}

int cmd_check_universal(const CommandConfig& cfg, std::ostream& os) {
    auto [lhs, rhs] = universal_curve_chi_check(space_of(cfg.space), cfg.n);
    bool ok = lhs == rhs;
    os << lhs << " " << rhs << (ok ? " OK" : " MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int cmd_strata(const CommandConfig& cfg, std::ostream& os) {
    StratumType::Space space = space_of(cfg.space);
    // Stream entry by entry: the n = 7 catalogs are large, and the output is
    // identical to the batch exporters for anyone who collects it.
    if (cfg.format == "csv") {
        os << "type,dimension,chi,epoly\n";
        for_each_type(space, cfg.n, [&](const StratumType& s) {
            StrataCatalog one;
            one.space = space;
            one.n = cfg.n;
            one.entries.push_back({s, dimension(s), chi_stratum(s), epoly_stratum(s)});
            std::string csv = catalog_to_csv(one);
            os << csv.substr(csv.find('\n') + 1);
        });
        return 0;
    }
    if (cfg.format == "json") {
        long long chi = 0;
        EPolynomial epoly;
        std::size_t count = 0;
        os << "{\"n\":" << cfg.n << ",\"space\":\"" << cfg.space << "\",\"strata\":[";
        for_each_type(space, cfg.n, [&](const StratumType& s) {
            long long c = chi_stratum(s);
            EPolynomial ep = epoly_stratum(s);
            json e;
            e["type"] = s.to_string();
            e["dimension"] = dimension(s);
            e["chi"] = c;
            e["epoly"] = ep.to_string();
            if (count > 0) os << ",";
            os << e.dump();
            chi += c;
            epoly = epoly + ep;
            ++count;
        });
        json totals;
        totals["chi"] = chi;
        totals["epoly"] = epoly.to_string();
        totals["count"] = count;
        os << "],\"totals\":" << totals.dump() << "}\n";
        return 0;
    }
    if (cfg.format == "dot") {
        std::size_t index = 0;
        for_each_type(space, cfg.n, [&](const StratumType& s) {
            os << type_to_dot(s, "s" + std::to_string(index++)) << "\n";
        });
        return 0;
    }
    throw std::invalid_argument("unknown strata format '" + cfg.format + "'");
}

MovingConfiguration limit_input(const CommandConfig& cfg) {
    if (cfg.input_path.empty() && cfg.marks_text.empty())
        throw std::invalid_argument("limit needs --input or --marks");
    std::vector<std::string> texts;
    std::string chart = cfg.chart;
    std::optional<long long> precision = cfg.precision;
    if (!cfg.input_path.empty()) {
        json j = json::parse(read_file(cfg.input_path));
        if (!j.is_object() || !j.contains("marks") || !j.at("marks").is_array())
            throw std::invalid_argument("limit input JSON needs a \"marks\" array");
        for (const auto& m : j.at("marks")) {
            if (!m.is_string()) throw std::invalid_argument("marks must be series strings");
            texts.push_back(m.get<std::string>());
        }
        if (j.contains("chart")) chart = j.at("chart").get<std::string>();
        if (!precision && j.contains("precision")) precision = j.at("precision").get<long long>();
    } else {
        for (const std::string& part : split(cfg.marks_text, ';')) texts.push_back(part);
    }
    if (texts.empty()) throw std::invalid_argument("no marks given");
    if (chart != "additive" && chart != "multiplicative")
        throw std::invalid_argument("chart must be additive or multiplicative");

    std::vector<LaurentSeries> series;
    series.reserve(texts.size());
    for (const std::string& s : texts) {
        LaurentSeries x = LaurentSeries::parse(s);
        if (precision) x = x.truncated(*precision);
        series.push_back(std::move(x));
    }
    if (chart == "multiplicative") return from_multiplicative(series, precision.value_or(0));
    MovingConfiguration out;
    out.n = (int)series.size();
    out.marks = std::move(series);
    out.precision = precision.value_or(default_precision(out.marks));
    return out;
}

int cmd_limit(const CommandConfig& cfg, std::ostream& os) {
    MovingConfiguration mc = limit_input(cfg);
    GaTree tree = stable_limit(mc);
    StratumType s = canonical_type(tree);
    json j;
    j["tree"] = json::parse(tree_to_json(tree));
    j["type"] = s.to_string();
    j["dimension"] = dimension(s);
    os << j.dump(2) << "\n";
    return 0;
}

int cmd_degenerate(const CommandConfig& cfg, std::ostream& os) {
    if (cfg.n > 6)
        throw BoundExceeded("degeneration sampling is limited to n <= 6");
    StratumType source = StratumType::parse_l(cfg.n, cfg.stratum_text);
    auto attained = degenerate_stratum_sample(source, cfg.exponent_bound, cfg.depth, cfg.seeds);
    os << "# space: L\n";
    os << "# n: " << cfg.n << "\n";
    os << "# stratum: " << source.to_string() << "\n";
    os << "# seeds: ";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) os << (i ? "," : "") << cfg.seeds[i];
    os << "\n";
    os << "# exponent_bound: " << cfg.exponent_bound << "\n";
    os << "# depth: " << cfg.depth << "\n";
    for (const StratumType& s : attained) os << s.to_string() << "\n";
    return 0;
}

int cmd_insert(const CommandConfig& cfg, std::ostream& os) {
    FDRTPoint p = fdrt_from_json(read_file(cfg.input_path));
    CurveLocation loc = location_from_json(cfg.location_text);
    os << fdrt_to_json(insert_mark(p, loc)) << "\n";
    return 0;
}

int cmd_forget(const CommandConfig& cfg, std::ostream& os) {
    FDRTPoint p = fdrt_from_json(read_file(cfg.input_path));
    os << fdrt_to_json(forget_mark(p, cfg.mark)) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Boundary strata, invariants, and degenerations of stable marked trees"};
    app.require_subcommand(1);
    app.add_option("--jobs", cfg.jobs, "worker count (output is canonical regardless)")
        ->envname("GATREE_JOBS")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output_path, "write output to a file instead of stdout");

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("-s,--space", cfg.space, "P (translation trees) or L (chains)")
            ->required()
            ->check(CLI::IsMember({"P", "L"}));
    };
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("-n", cfg.n, "number of marks")->required()->check(CLI::PositiveNumber);
    };

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic of a space");
    add_space(euler);
    add_n(euler);

    CLI::App* table = app.add_subcommand("table", "CSV of Euler characteristics for both spaces");
    table->add_option("--max-n", cfg.max_n, "largest mark count")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* epoly = app.add_subcommand("epoly", "total E-polynomial of a space");
    add_space(epoly);
    add_n(epoly);

    CLI::App* universal = app.add_subcommand(
        "check-universal", "compare the universal-curve chi recursion at level n");
    add_space(universal);
    add_n(universal);

    CLI::App* strata = app.add_subcommand("strata", "stream the stratum catalog");
    add_space(strata);
    add_n(strata);
    bool want_json = false, want_dot = false, want_csv = false;
    strata->add_flag("--json", want_json, "emit the catalog as one JSON document");
    strata->add_flag("--dot", want_dot, "emit one Graphviz digraph per stratum");
    strata->add_flag("--csv", want_csv, "emit CSV rows (default)");

    CLI::App* limit = app.add_subcommand("limit", "stable t -> 0 limit of moving marks");
    CLI::Option* limit_input_opt =
        limit->add_option("--input", cfg.input_path, "JSON file with marks/chart/precision");
    limit->add_option("--marks", cfg.marks_text, "semicolon-separated Laurent series")
        ->excludes(limit_input_opt);
    limit->add_option("--chart", cfg.chart, "additive (x, default) or multiplicative (u = 1+tx)")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    long long precision_flag = 0;
    CLI::Option* precision_opt = limit->add_option(
        "--precision", precision_flag, "truncate inputs at t^N before computing");

    CLI::App* degenerate =
        app.add_subcommand("degenerate", "stratum types attained by sampled one-parameter families");
    add_n(degenerate);
    degenerate->add_option("--stratum", cfg.stratum_text, "source stratum, e.g. \"(1,2 | 3)\"")
        ->required();
    degenerate->add_option("--seeds", cfg.seeds, "sampling seeds")->delimiter(',');
    degenerate->add_option("--exponent-bound", cfg.exponent_bound, "largest scale gap")
        ->check(CLI::PositiveNumber);
    degenerate->add_option("--depth", cfg.depth, "perturbation depth")
        ->check(CLI::NonNegativeNumber);

    CLI::App* insert = app.add_subcommand("insert", "insert mark n+1 into a point");
    insert->add_option("--input", cfg.input_path, "point JSON file")->required();
    insert->add_option("--location", cfg.location_text, "location JSON")->required();

    CLI::App* forget = app.add_subcommand("forget", "forget a mark of a point");
    forget->add_option("--input", cfg.input_path, "point JSON file")->required();
    forget->add_option("--mark", cfg.mark, "mark index to forget")
        ->required()
        ->check(CLI::PositiveNumber);

    for (CLI::App* sub : {euler, table, epoly, universal, strata, limit, degenerate, insert, forget})
        sub->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("gatree");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (want_json) cfg.format = "json";
    if (want_dot) cfg.format = "dot";
    if (want_csv) cfg.format = "csv";
    if (want_json + want_dot + want_csv > 1) {
        err << "error: choose exactly one of --json/--dot/--csv\n";
        return 2;
    }
    if (precision_opt->count() > 0) cfg.precision = precision_flag;

    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.output_path.empty()) {
            file.open(cfg.output_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open '" + cfg.output_path + "'");
            os = &file;
        }
        for (CLI::App* sub :
             {euler, table, epoly, universal, strata, limit, degenerate, insert, forget})
            if (sub->parsed()) cfg.subcommand = sub->get_name();
        if (euler->parsed()) return cmd_euler(cfg, *os);
        if (table->parsed()) return cmd_table(cfg, *os);
        if (epoly->parsed()) return cmd_epoly(cfg, *os);
        if (universal->parsed()) return cmd_check_universal(cfg, *os);
        if (strata->parsed()) return cmd_strata(cfg, *os);
        if (limit->parsed()) return cmd_limit(cfg, *os);
        if (degenerate->parsed()) return cmd_degenerate(cfg, *os);
        if (insert->parsed()) return cmd_insert(cfg, *os);
        if (forget->parsed()) return cmd_forget(cfg, *os);
        err << "error: no subcommand\n";
        return 2;
    } catch (const IndeterminateValuation& e) {
        err << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const BeyondPrecision& e) {
        err << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const BoundExceeded& e) {
        err << "bound error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gatree
