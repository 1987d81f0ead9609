#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "icg/convex_builder.hpp"
#include "icg/gabriel.hpp"
#include "icg/generators.hpp"
#include "icg/io.hpp"
#include "icg/path_oracle.hpp"
#include "icg/random.hpp"
#include "icg/steiner.hpp"
#include "icg/theta_router.hpp"

namespace icg::cli {

namespace {

using Json = nlohmann::ordered_json;

// Upper bound on the detour of any increasing-chord path.
constexpr double kDetourBound = 2.094 + 1e-6;

struct Options {
    std::size_t n = 0, rows = 0, cols = 0;
    std::uint64_t seed = 0;
    double jitter = 0.05;
    double direction = 0.0;
    std::optional<std::uint64_t> perturb_seed;
    std::string input, graph, output;
    bool check = false, json = false;
    std::optional<std::size_t> max_rounds;
    Index from = 0, to = 0;
    std::string path, pairs = "all", highlight;
};

std::vector<Index> parse_ids(const std::string& text, const char* what) {
    std::vector<Index> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        Index v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
            throw Error(ErrorKind::Parse, std::string(what) + ": expected comma-separated vertex ids, got '" + text + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

Json theta_json(const std::optional<AngularInterval>& iv) {
    if (!iv) return nullptr;
    return Json{{"lo_deg", iv->lo_deg}, {"width_deg", iv->width_deg}};
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

int cmd_gen(const std::string& kind, const Options& o, std::ostream& out) {
    PointSet ps;
    Json report{{"command", "gen " + kind}};
    if (kind == "convex") {
        ps = gen_convex(o.n, o.seed);
    } else if (kind == "onesided") {
        ps = gen_onesided(o.n, Direction(o.direction), o.seed);
        report["direction_deg"] = o.direction;
    } else {
        std::size_t rows = o.rows, cols = o.cols;
        if (rows == 0 && cols == 0) {
            rows = cols = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(o.n))));
            if (rows * cols != o.n) {
                throw Error(ErrorKind::InvalidArgument, "lattice --n must be a perfect square; use --rows and --cols");
            }
        } else if (rows == 0 || cols == 0) {
            throw Error(ErrorKind::InvalidArgument, "lattice needs both --rows and --cols");
        }
        ps = lattice_generator(rows, cols, o.jitter, o.seed);
        report["rows"] = rows;
        report["cols"] = cols;
        report["jitter"] = o.jitter;
    }
    write_points(ps, o.output);
    report["n"] = ps.size();
    report["seed"] = o.seed;
    report["output"] = o.output;
    emit(out, report);
    return kExitOk;
}

int cmd_build(const std::string& kind, const Options& o, std::ostream& out) {
    PointSet ps = read_points(o.input);
    Json report{{"command", "build " + kind}};
    if (o.perturb_seed) {
        ps = perturb(ps, *o.perturb_seed);
        report["perturb_seed"] = *o.perturb_seed;
    }
    GeomGraph g;
    std::size_t budget = 0;
    BuildStats stats;
    if (kind == "one-sided") {
        g = build_one_sided(ps, Direction(o.direction));
        budget = ps.size() >= 2 ? 2 * ps.size() - 3 : 0;
        report["direction_deg"] = o.direction;
    } else {
        g = build_convex(ps, &stats);
        budget = convex_edge_budget(ps.size());
    }
    write_graph(g, o.output);
    report["n"] = ps.size();
    report["edges"] = g.num_edges();
    report["budget"] = budget;
    report["within_budget"] = g.num_edges() <= budget;
    if (kind == "convex") {
        report["max_depth"] = stats.max_depth;
        report["partitions"] = stats.partitions;
        const double n = static_cast<double>(ps.size());
        report["edges_per_n_log2_n"] = ps.size() >= 2 ? g.num_edges() / (n * std::log2(n)) : 0.0;
    }
    report["output"] = o.output;
    emit(out, report);
    return g.num_edges() <= budget ? kExitOk : kExitVerifyFailed;
}

int cmd_gabriel(const Options& o, std::ostream& out) {
    const PointSet ps = read_points(o.input);
    const GeomGraph g = gabriel_graph(ps);
    write_graph(g, o.output);
    Json report{{"command", "gabriel"}, {"n", ps.size()}, {"edges", g.num_edges()}};
    int code = kExitOk;
    if (o.check) {
        const TriangulationCheck c = check_gabriel_triangulation(g);
        report["gabriel_triangulation"] = c.ok;
        report["reason"] = c.reason;
        code = c.ok ? kExitOk : kExitVerifyFailed;
    }
    report["output"] = o.output;
    emit(out, report);
    return code;
}

int cmd_augment(const Options& o, std::ostream& out) {
    const PointSet ps = read_points(o.input);
    const std::size_t rounds = o.max_rounds.value_or(default_max_rounds(ps.size()));
    const AugmentResult r = augment_heuristic(ps, rounds, o.seed);
    write_graph(r.triangulation.graph, o.output);
    emit(out, Json{{"command", "augment"},
                   {"n", ps.size()},
                   {"seed", o.seed},
                   {"max_rounds", rounds},
                   {"rounds", r.rounds},
                   {"steiner_count", r.steiner_count},
                   {"edges", r.triangulation.graph.num_edges()},
                   {"succeeded", r.succeeded},
                   {"reason", r.reason},
                   {"output", o.output}});
    return r.succeeded ? kExitOk : kExitVerifyFailed;
}

int cmd_route(const Options& o, std::ostream& out) {
    const GeomGraph g = read_graph(o.graph);
    const auto w = route(g, o.from, o.to);
    if (o.json) {
        Json report{{"command", "route"}, {"from", o.from}, {"to", o.to}, {"found", w.has_value()}};
        if (w) {
            const auto pts = path_points(g, w->vertices);
            report["witness"] = w->vertices;
            report["theta_deg"] = w->theta_deg ? Json(*w->theta_deg) : Json(nullptr);
            report["increasing_chord"] = is_increasing_chord(pts);
            report["detour"] = detour(pts);
        }
        emit(out, report);
    } else if (w) {
        out << "witness [";
        for (std::size_t i = 0; i < w->vertices.size(); ++i) {
            out << (i ? "," : "") << w->vertices[i];
        }
        out << "]\ntheta_deg " << (w->theta_deg ? format_double(*w->theta_deg) : "none") << '\n';
    } else {
        out << "no theta-path from " << o.from << " to " << o.to << '\n';
    }
    return w ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_path(const Options& o, std::ostream& out) {
    const GeomGraph g = read_graph(o.graph);
    const auto ids = parse_ids(o.path, "--path");
    const VerifyReport r = verify_path(g, ids);
    emit(out, Json{{"command", "verify path"},
                   {"path", ids},
                   {"self_approaching_forward", r.self_approaching_forward},
                   {"self_approaching_backward", r.self_approaching_backward},
                   {"increasing_chord", r.increasing_chord},
                   {"theta_interval", theta_json(r.theta_interval)},
                   {"detour", r.detour}});
    return r.increasing_chord ? kExitOk : kExitVerifyFailed;
}

struct PairOutcome {
    bool routed = false;
    bool verified = false;
    double detour = 0.0;
};

int cmd_verify_graph(const Options& o, std::ostream& out) {
    const GeomGraph g = read_graph(o.graph);
    const std::size_t n = g.num_vertices();
    std::vector<std::pair<Index, Index>> pairs;
    if (o.pairs == "all") {
        for (Index s = 0; s < n; ++s) {
            for (Index t = s + 1; t < n; ++t) pairs.emplace_back(s, t);
        }
    } else if (o.pairs.rfind("sample:", 0) == 0) {
        const auto k = parse_ids(o.pairs.substr(7), "--pairs sample:K");
        if (k.size() != 1) throw Error(ErrorKind::Parse, "--pairs sample:K takes one count");
        if (n >= 2) {
            Rng rng(o.seed);
            for (std::size_t i = 0; i < k[0]; ++i) {
                const Index s = rng.below(n);
                Index t = rng.below(n - 1);
                if (t >= s) ++t;
                pairs.emplace_back(s, t);
            }
        }
    } else {
        throw Error(ErrorKind::Parse, "--pairs must be 'all' or 'sample:K'");
    }

    // Pairs are checked in parallel; outcomes are stored by pair index so the
    // report does not depend on the schedule.
    const ThetaRouter router(g);
    std::vector<PairOutcome> outcomes(pairs.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < pairs.size(); i += stride) {
            const auto w = router.route(pairs[i].first, pairs[i].second);
            if (!w) continue;
            const auto pts = path_points(g, w->vertices);
            outcomes[i].routed = true;
            outcomes[i].detour = detour(pts);
            outcomes[i].verified = w->theta_deg && is_theta_path(pts, *w->theta_deg) && is_increasing_chord(pts);
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, pairs.size() / 64));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
    work(0, workers);
    for (auto& t : pool) t.join();

    std::size_t routed = 0, failures = 0, detour_violations = 0;
    double max_detour = 1.0;
    Json failed = Json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairOutcome& r = outcomes[i];
        routed += r.routed;
        if (!r.routed || !r.verified) {
            ++failures;
            if (failed.size() < 20) failed.push_back({pairs[i].first, pairs[i].second});
        }
        if (r.routed) {
            max_detour = std::max(max_detour, r.detour);
            detour_violations += r.detour > kDetourBound;
        }
    }
    Json report{{"command", "verify graph"}, {"n", n}, {"edges", g.num_edges()}};
    report["convex_budget"] = n >= 2 && is_convex_position(g.points()) ? Json(convex_edge_budget(n)) : Json(nullptr);
    report["pairs"] = o.pairs;
    report["seed"] = o.seed;
    report["pairs_tested"] = pairs.size();
    report["routed"] = routed;
    report["failures"] = failures;
    report["failed_pairs"] = failed;
    report["max_detour"] = max_detour;
    report["detour_violations"] = detour_violations;
    const bool ok = failures == 0 && detour_violations == 0;
    report["ok"] = ok;
    emit(out, report);
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
    const GeomGraph g = read_graph(o.graph);
    std::vector<Index> hl;
    if (!o.highlight.empty()) hl = parse_ids(o.highlight, "--highlight");
    write_svg(g, hl, o.output);
    emit(out, Json{{"command", "render"},
                   {"n", g.num_vertices()},
                   {"edges", g.num_edges()},
                   {"highlight", hl},
                   {"output", o.output}});
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Increasing-chord graphs: construction, routing and verification", "icg"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a point set");
    gen->require_subcommand(1);
    for (const char* kind : {"convex", "onesided", "lattice"}) {
        auto* sub = gen->add_subcommand(kind, std::string("Generate a ") + kind + " point set");
        sub->add_option("--n", o.n, "Number of points")->required(std::string(kind) != "lattice");
        sub->add_option("--seed", o.seed, "Random seed")->required();
        sub->add_option("-o,--output", o.output, "Point file to write")->required();
        if (std::string(kind) == "onesided") {
            sub->add_option("--direction", o.direction, "Direction d in degrees");
        }
        if (std::string(kind) == "lattice") {
            sub->add_option("--jitter", o.jitter, "Interior jitter in lattice spacings, [0, 0.2)");
            sub->add_option("--rows", o.rows, "Lattice rows");
            sub->add_option("--cols", o.cols, "Lattice columns");
        }
    }

    auto* build = app.add_subcommand("build", "Build an increasing-chord graph on a convex point set");
    build->require_subcommand(1);
    for (const char* kind : {"one-sided", "convex"}) {
        auto* sub = build->add_subcommand(kind, std::string("Use the ") + kind + " construction");
        sub->add_option("-i,--input", o.input, "Point file")->required();
        sub->add_option("-o,--output", o.output, "Graph file to write")->required();
        sub->add_option("--perturb-seed", o.perturb_seed, "Perturb the input by 1e-7 of its extent first");
        if (std::string(kind) == "one-sided") {
            sub->add_option("--direction", o.direction, "Direction d in degrees")->required();
        }
    }

    auto* gab = app.add_subcommand("gabriel", "Compute the Gabriel graph of a point set");
    gab->add_option("-i,--input", o.input, "Point file")->required();
    gab->add_option("-o,--output", o.output, "Graph file to write")->required();
    gab->add_flag("--check", o.check, "Fail unless the result is a Gabriel triangulation");

    auto* aug = app.add_subcommand("augment", "Add Steiner points toward a Gabriel triangulation");
    aug->add_option("-i,--input", o.input, "Point file")->required();
    aug->add_option("-o,--output", o.output, "Graph file to write")->required();
    aug->add_option("--max-rounds", o.max_rounds, "Round budget (default 50n)");
    aug->add_option("--seed", o.seed, "Random seed");

    auto* rt = app.add_subcommand("route", "Find a theta-path between two vertices");
    rt->add_option("-g,--graph", o.graph, "Graph file")->required();
    rt->add_option("--from", o.from, "Source vertex")->required();
    rt->add_option("--to", o.to, "Target vertex")->required();
    rt->add_flag("--json", o.json, "Print a JSON report");

    auto* verify = app.add_subcommand("verify", "Verify paths or whole graphs");
    verify->require_subcommand(1);
    auto* vpath = verify->add_subcommand("path", "Check one path");
    vpath->add_option("-g,--graph", o.graph, "Graph file")->required();
    vpath->add_option("--path", o.path, "Comma-separated vertex ids")->required();
    auto* vgraph = verify->add_subcommand("graph", "Route and check many vertex pairs");
    vgraph->add_option("-g,--graph", o.graph, "Graph file")->required();
    vgraph->add_option("--pairs", o.pairs, "'all' or 'sample:K'");
    vgraph->add_option("--seed", o.seed, "Seed for sampled pairs");

    auto* render = app.add_subcommand("render", "Draw a graph as SVG");
    render->add_option("-g,--graph", o.graph, "Graph file")->required();
    render->add_option("--highlight", o.highlight, "Comma-separated witness vertex ids");
    render->add_option("-o,--output", o.output, "SVG file to write")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const CLI::App* leaf = &app;
        while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
        err << "error: " << e.what() << "\n\n" << leaf->help();
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (gen->parsed()) {
            code = cmd_gen(gen->get_subcommands().front()->get_name(), o, out);
        } else if (build->parsed()) {
            code = cmd_build(build->get_subcommands().front()->get_name(), o, out);
        } else if (gab->parsed()) {
            code = cmd_gabriel(o, out);
        } else if (aug->parsed()) {
            code = cmd_augment(o, out);
        } else if (rt->parsed()) {
            code = cmd_route(o, out);
        } else if (vpath->parsed()) {
            code = cmd_verify_path(o, out);
        } else if (vgraph->parsed()) {
            code = cmd_verify_graph(o, out);
        } else if (render->parsed()) {
            code = cmd_render(o, out);
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "time: " << secs << " s\n";
    return code;
}

} // namespace icg::cli
