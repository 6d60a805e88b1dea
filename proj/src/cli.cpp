#include "spider/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "spider/closed_form.hpp"
#include "spider/graph.hpp"
#include "spider/small_world.hpp"
#include "spider/spider.hpp"

namespace spider::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 I/O error, "
    "4 node cap exceeded.";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Count>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

Count default_node_cap() {
    if (const char* env = std::getenv(kNodeCapEnv)) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(kNodeCapEnv) + " must be a positive integer");
    }
    return kDefaultReportNodeCap;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void write_output(const std::string& path, std::ostream& fallback, Fn&& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    body(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

struct GraphOptions {
    Count m = 0, k = 0, l = 0;
    std::string format = "edge-list";
    std::string out;
};

void add_param_options(CLI::App* cmd, Count& m, Count& k, Count& l) {
    cmd->add_option("-M", m, "core size (>= 1)")->required();
    cmd->add_option("-K", k, "legs per core node (>= 0)")->required();
    cmd->add_option("-L", l, "leg length (>= 0)")->required();
}

SpiderParams checked_params(Count m, Count k, Count l) {
    try {
        return normalize(m, k, l);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

GraphFormat checked_format(const std::string& name) {
    try {
        return parse_graph_format(name);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

int cmd_generate(const GraphOptions& o, bool summary, std::ostream& out) {
    const SpiderParams p = checked_params(o.m, o.k, o.l);
    const GraphFormat format = checked_format(o.format);
    const Graph g = build_spider(p);
    const auto roles = node_roles(p);
    if (summary) {
        out << "spider " << p << "\n"
            << "nodes: " << node_count(p) << "\n"
            << "edges: " << edge_count(p) << "\n"
            << "pairs: " << pair_count(p) << "\n";
    }
    write_output(o.out, out, [&](std::ostream& os) { export_graph(g, roles, format, os); });
    return kOk;
}

struct ReportOptions {
    Count m = 0, k = 0, l = 0;
    std::string source = "both";
    std::optional<Count> node_cap;
};

// One line per indicator. With both sources, the closed-form value is shown and
// a MATCH/MISMATCH flag compares it with the oracle.
class ReportPrinter {
public:
    ReportPrinter(std::ostream& out, bool closed, bool oracle) : out_(out), closed_(closed), oracle_(oracle) {}

    void line(const std::string& name, const std::optional<std::string>& closed_value,
              const std::optional<std::string>& oracle_value) {
        out_ << name << ": ";
        const auto& shown = closed_ ? closed_value : oracle_value;
        out_ << (shown ? *shown : "undefined");
        if (closed_ && oracle_) {
            if (closed_value == oracle_value) {
                out_ << "  [MATCH]";
            } else {
                out_ << "  [MISMATCH oracle=" << (oracle_value ? *oracle_value : "undefined") << "]";
                mismatch_ = true;
            }
        }
        out_ << "\n";
    }

    [[nodiscard]] bool mismatch() const { return mismatch_; }

private:
    std::ostream& out_;
    bool closed_;
    bool oracle_;
    bool mismatch_ = false;
};

int cmd_report(const ReportOptions& o, std::ostream& out, std::ostream& err) {
    const SpiderParams p = checked_params(o.m, o.k, o.l);
    const bool want_closed = o.source == "closed" || o.source == "both";
    const bool want_oracle = o.source == "oracle" || o.source == "both";
    if (!want_closed && !want_oracle) throw UsageError("--source must be closed, oracle or both");
    const Count n = node_count(p);
    const Count cap = o.node_cap ? *o.node_cap : default_node_cap();
    if (want_oracle && n > cap) {
        err << "error: oracle requested for N=" << n << " nodes, above the node cap " << cap << "\n";
        return kResource;
    }
    const bool pairs = n >= 2;

    using Opt = std::optional<std::string>;
    struct Values {
        Opt delta, gamma, alpha, density, diameter, h_index, nu, mean, avg_degree;
    };
    Values c, g;
    if (want_closed) {
        const auto delta = delta_closed(p);
        const auto gamma = gamma_closed(p);
        Count nu = 0;
        for (Count x : gamma) nu = checked_add(nu, x);
        c.delta = join(delta);
        c.gamma = join(gamma);
        c.diameter = std::to_string(diameter_closed(p));
        c.h_index = std::to_string(h_index_closed(p));
        c.nu = std::to_string(nu);
        c.avg_degree = average_degree_closed(p).str();
        if (pairs) {
            const auto r = closed_form_report(p);
            c.alpha = join(r.alpha);
            c.density = r.density.str();
            c.mean = Rational(r.total_distance, pair_count(p)).str();
        }
    }
    if (want_oracle) {
        const Graph graph = build_spider(p);
        const auto delta = degree_array(graph);
        Count total_degree = 0;
        for (Count d : delta) total_degree += d;
        g.delta = join(delta);
        g.gamma = join(gamma_array(graph));
        g.diameter = std::to_string(diameter(graph));
        g.h_index = std::to_string(h_index(delta));
        g.nu = std::to_string(neighboring_index(graph));
        g.avg_degree = Rational(total_degree, n).str();
        if (pairs) {
            const auto r = compute_indicators(graph);
            g.alpha = join(r.alpha);
            g.density = r.density.str();
            g.mean = r.mean_distance.str();
        }
    }

    out << "spider " << p << "  N=" << n << "  edges=" << edge_count(p) << "  pairs=" << pair_count(p)
        << "  source=" << o.source << "\n";
    ReportPrinter pr(out, want_closed, want_oracle);
    pr.line("delta", c.delta, g.delta);
    pr.line("gamma", c.gamma, g.gamma);
    pr.line("alpha", c.alpha, g.alpha);
    pr.line("density", c.density, g.density);
    pr.line("diameter", c.diameter, g.diameter);
    pr.line("h-index", c.h_index, g.h_index);
    pr.line("neighboring-index", c.nu, g.nu);
    pr.line("mean-distance", c.mean, g.mean);
    pr.line("average-degree", c.avg_degree, g.avg_degree);
    return pr.mismatch() ? kMismatch : kOk;
}

struct AsymptoticsOptions {
    std::string notion;
    std::string vary;
    std::string fix;
    Count base = 1;
    int count = 12;
    std::vector<Count> steps;
    std::string out;
    bool all = false;
};

GrowthDirection parse_direction(const std::string& vary, const std::string& fix) {
    GrowthDirection dir = canonical_direction(parse_parameter(vary));
    std::stringstream ss(fix);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects NAME=VALUE pairs, got '" + item + "'");
        const Parameter which = parse_parameter(item.substr(0, eq));
        if (which == dir.varying) throw UsageError("--fix cannot pin the varying parameter " + vary);
        Count value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad value in --fix: '" + item + "'");
        }
        switch (which) {
            case Parameter::M: dir.fixed.m = value; break;
            case Parameter::K: dir.fixed.k = value; break;
            case Parameter::L: dir.fixed.l = value; break;
        }
    }
    return dir;
}

std::string fixed_description(const GrowthDirection& dir) {
    std::string s;
    auto add = [&](Parameter p, Count v) {
        if (p == dir.varying) return;
        if (!s.empty()) s += ",";
        s += std::string(to_string(p)) + "=" + std::to_string(v);
    };
    add(Parameter::M, dir.fixed.m);
    add(Parameter::K, dir.fixed.k);
    add(Parameter::L, dir.fixed.l);
    return s;
}

int cmd_asymptotics(const AsymptoticsOptions& o, std::ostream& out) {
    if (o.all) {
        out << std::left << std::setw(7) << "notion" << std::setw(8) << "grows" << std::setw(38)
            << "verdict" << "numeric trend\n";
        for (const auto& cell : verdict_table()) {
            out << std::setw(7) << to_string(cell.notion)
                << std::setw(8) << (std::string(to_string(cell.varying)) + "->inf")
                << std::setw(38) << cell.verdict.describe()
                << (cell.verdict.corroborated ? "agrees" : "inconclusive") << "\n";
        }
        out << std::right;
        return kOk;
    }
    if (o.notion.empty() || o.vary.empty()) throw UsageError("asymptotics needs --notion and --vary, or --all");
    Notion notion{};
    GrowthDirection dir;
    try {
        notion = parse_notion(o.notion);
        dir = parse_direction(o.vary, o.fix);
        dir.validate();
    } catch (const InputError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto steps = o.steps.empty() ? geometric_steps(dir, o.base, o.count) : o.steps;
    std::vector<RatioPoint> seq;
    try {
        seq = ratio_sequence(notion, dir, steps);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto verdict = classify(notion, dir);
    write_output(o.out, out, [&](std::ostream& os) {
        os << "step,N,numerator,lnN,ratio\n";
        for (const auto& pt : seq) {
            os << pt.step << ',' << pt.n << ',' << fmt_double(pt.numerator) << ','
               << fmt_double(pt.log_n) << ',' << fmt_double(pt.ratio) << '\n';
        }
    });
    out << "verdict " << to_string(notion) << " " << to_string(dir.varying) << "->inf ("
        << fixed_description(dir) << "): " << verdict.describe() << "\n";
    out << "numeric trend: " << (shows_trend(seq, verdict.kind) ? "agrees" : "inconclusive") << "\n";
    return kOk;
}

}  // namespace

int verify(const GridBounds& bounds, unsigned threads, const ReportProvider& provider, std::ostream& out,
           std::ostream& err) {
    if (bounds.m_max < 1 || bounds.k_max < 1 || bounds.l_max < 1) {
        err << "error: grid bounds must be at least 1\n";
        return kUsage;
    }
    const auto summary = verify_grid(bounds, provider, threads);
    for (const auto& m : summary.mismatches) {
        out << "MISMATCH " << m.params << " " << m.indicator;
        if (m.first_index) out << " at index " << *m.first_index;
        out << ": " << m.detail << "\n";
    }
    out << summary.verified << " parameter points verified, " << summary.skipped << " skipped, "
        << summary.mismatches.size() << " mismatches\n";
    return summary.mismatches.empty() ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spider networks: construction, indicators, closed-form verification and small-world asymptotics",
                 "spider"};
    app.footer(kExitCodes);
    app.require_subcommand(1, 1);

    GraphOptions gen;
    auto* generate = app.add_subcommand("generate", "build a spider and write it as a graph file");
    add_param_options(generate, gen.m, gen.k, gen.l);
    generate->add_option("--format", gen.format, "edge-list | dot | adjacency-csv")->capture_default_str();
    generate->add_option("-o,--out", gen.out, "output file (default: standard output)");

    GraphOptions exp;
    auto* exportc = app.add_subcommand("export", "write a spider graph file without the summary");
    add_param_options(exportc, exp.m, exp.k, exp.l);
    exportc->add_option("--format", exp.format, "edge-list | dot | adjacency-csv")->capture_default_str();
    exportc->add_option("-o,--out", exp.out, "output file (default: standard output)");

    ReportOptions rep;
    Count rep_cap = 0;
    auto* report = app.add_subcommand("report", "print all indicators of a spider");
    add_param_options(report, rep.m, rep.k, rep.l);
    report->add_option("--source", rep.source, "closed | oracle | both")->capture_default_str();
    auto* rep_cap_opt = report->add_option(
        "--node-cap", rep_cap, std::string("oracle node cap (default 20000, or $") + kNodeCapEnv + ")");

    GridBounds bounds;
    unsigned threads = 1;
    auto* verifyc = app.add_subcommand("verify", "check closed forms against the brute-force oracle on a grid");
    verifyc->add_option("--Mmax", bounds.m_max, "largest M")->capture_default_str();
    verifyc->add_option("--Kmax", bounds.k_max, "largest K")->capture_default_str();
    verifyc->add_option("--Lmax", bounds.l_max, "largest L")->capture_default_str();
    verifyc->add_option("--node-cap", bounds.node_cap, "skip spiders with more nodes")->capture_default_str();
    verifyc->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

    AsymptoticsOptions asy;
    auto* asym = app.add_subcommand("asymptotics", "small-world ratio sequence and verdict for one growth direction");
    asym->add_option("--notion", asy.notion, "DSWL | DSWA | SWD | SWA");
    asym->add_option("--vary", asy.vary, "M | K | L");
    asym->add_option("--fix", asy.fix, "fixed parameters, e.g. K=1,L=1 (default M=2,K=1,L=1)");
    asym->add_option("--base", asy.base, "geometric steps are base*2^i")->capture_default_str();
    asym->add_option("--count", asy.count, "number of geometric steps")->capture_default_str();
    asym->add_option("--steps", asy.steps, "explicit step values (overrides --base)")->delimiter(',');
    asym->add_option("-o,--out", asy.out, "CSV output file (default: standard output)");
    asym->add_flag("--all", asy.all, "print the full 12-cell verdict table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, true, out);
        if (exportc->parsed()) return cmd_generate(exp, false, out);
        if (report->parsed()) {
            if (*rep_cap_opt) rep.node_cap = rep_cap;
            return cmd_report(rep, out, err);
        }
        if (verifyc->parsed()) return verify(bounds, threads, closed_form_report, out, err);
        if (asym->parsed()) return cmd_asymptotics(asy, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    }
    return kUsage;
}

}  // namespace spider::cli
