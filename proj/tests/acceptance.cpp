// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Tolerances and limits are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "icg/convex_builder.hpp"
#include "icg/gabriel.hpp"
#include "icg/generators.hpp"
#include "icg/path_oracle.hpp"
#include "icg/steiner.hpp"
#include "icg/theta_router.hpp"
#include "oracles.hpp"

using namespace icg;

namespace {

constexpr double kDetourBound = 2.094 + 1e-6;
constexpr double kSteinerSuccessRate = 0.8;
constexpr double kBorderlineMargin = 1e-6;  // paths this close to the boundary are set aside

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Detours of every witness from criteria 2, 4 and 6.
struct DetourLog {
    std::size_t count = 0;
    std::size_t violations = 0;
    double max = 1.0;
    void add(double d) {
        ++count;
        max = std::max(max, d);
        if (d > kDetourBound) ++violations;
    }
} detours;

// Counterclockwise order of a convex-position set by angle about its centroid.
std::vector<Index> ccw_by_angle(const PointSet& ps) {
    double cx = 0, cy = 0;
    for (const Point& p : ps.points()) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(ps.size());
    cy /= static_cast<double>(ps.size());
    std::vector<Index> ids(ps.size());
    std::iota(ids.begin(), ids.end(), Index{0});
    std::sort(ids.begin(), ids.end(), [&](Index a, Index b) {
        return std::atan2(ps[a].y - cy, ps[a].x - cx) < std::atan2(ps[b].y - cy, ps[b].x - cx);
    });
    return ids;
}

struct PairStats {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// Routes one pair and checks the witness: edges of g, increasing-chord and a
// theta-path for the reported theta.
void check_pair(const ThetaRouter& router, Index s, Index t, PairStats& st) {
    ++st.pairs;
    const auto fail = [&](const std::string& why) {
        if (st.failures++ == 0) st.first_failure = "(" + std::to_string(s) + "," + std::to_string(t) + "): " + why;
    };
    const auto w = router.route(s, t);
    if (!w) return fail("no witness");
    if (w->vertices.front() != s || w->vertices.back() != t) return fail("wrong endpoints");
    try {
        validate_witness(router.graph(), w->vertices);
    } catch (const Error& e) {
        return fail(e.what());
    }
    const auto pts = path_points(router.graph(), w->vertices);
    if (!is_increasing_chord(pts)) return fail("not increasing-chord");
    if (!w->theta_deg || !is_theta_path(pts, *w->theta_deg)) return fail("not a theta-path for the reported theta");
    detours.add(detour(pts));
}

void all_pairs(const GeomGraph& g, PairStats& st) {
    const ThetaRouter router(g);
    for (Index s = 0; s < g.num_vertices(); ++s)
        for (Index t = 0; t < g.num_vertices(); ++t)
            if (s != t) check_pair(router, s, t, st);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome criterion1() {
    Outcome o;
    std::size_t sets = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::size_t n = 2 + s % 99;
        Rng rng(s);
        const Direction d(rng.uniform(0.0, 360.0));
        const auto ps = gen_onesided(n, d, 100 + s);
        const auto g = build_one_sided(ps, d);
        ++sets;
        bool ok = g.num_edges() == 2 * n - 3 && crossing_free(g);
        const auto order = ccw_by_angle(ps);
        for (std::size_t k = 0; k < n && ok && n >= 2; ++k) {
            const Index a = order[k], b = order[(k + 1) % n];
            if (a != b && !g.has_edge(a, b)) ok = false;
        }
        if (!ok && o.pass) {
            o.pass = false;
            o.detail = fmt("seed %llu n=%zu: %zu edges, crossing_free=%d", (unsigned long long)s, n, g.num_edges(),
                           int(crossing_free(g)));
        }
    }
    if (o.pass) o.detail = fmt("%zu sets, exactly 2n-3 edges, plane, hull edges present", sets);
    return o;
}

Outcome criterion2() {
    PairStats st;
    for (std::uint64_t k = 0; k < 20; ++k) {
        const std::size_t n = 3 + 3 * k;
        Rng rng(200 + k);
        const Direction d(rng.uniform(0.0, 360.0));
        const auto ps = gen_onesided(n, d, 300 + k);
        all_pairs(build_one_sided(ps, d), st);
    }
    return {st.failures == 0, fmt("%zu ordered pairs over 20 sets (n<=60), %zu failures %s", st.pairs, st.failures,
                                  st.first_failure.c_str())};
}

Outcome criterion3() {
    Outcome o;
    double worst = 0.0;
    std::ostringstream rows;
    for (std::size_t n : {8, 16, 32, 64, 128, 256}) {
        const auto ps = gen_convex(n, 400 + n);
        const auto g = build_convex(ps);
        const std::size_t budget = 2 * n + oracle::budget_f(n);
        const double ratio = static_cast<double>(g.num_edges()) / (static_cast<double>(n) * std::log2(double(n)));
        worst = std::max(worst, ratio);
        rows << " n=" << n << ":" << g.num_edges() << "/" << budget;
        if (g.num_edges() > budget) o.pass = false;
    }
    o.detail = "edges/budget" + rows.str() + fmt("; max |S|/(n log2 n) = %.4f", worst);
    return o;
}

Outcome criterion4() {
    PairStats st;
    for (std::size_t n : {8, 14, 20, 26, 32, 38, 44, 50, 56, 64}) all_pairs(build_convex(gen_convex(n, 500 + n)), st);
    return {st.failures == 0, fmt("%zu ordered pairs over 10 sets (n<=64), %zu failures %s", st.pairs, st.failures,
                                  st.first_failure.c_str())};
}

Outcome criterion5() {
    Outcome o;
    std::size_t sets = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::size_t n = 5 + s % 196;
        const auto ps = gen_convex(n, 600 + s);
        Rng rng(s);
        std::optional<PartitionQuad> q;
        double d1 = 0.0;
        for (int tries = 0; tries < 100 && !q; ++tries) {
            d1 = rng.uniform(0.0, 360.0);
            try {
                q = balanced_partition(ps, Direction(d1));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Degenerate) throw;
            }
        }
        ++sets;
        std::string why;
        if (!q) {
            why = "no generic direction";
        } else {
            // Classify every point from two independently computed chains.
            std::vector<Point> poly;
            const auto order = ccw_by_angle(ps);
            for (Index i : order) poly.push_back(ps[i]);
            const auto c1 = oracle::first_chain(poly, d1);
            const auto c2 = oracle::first_chain(poly, q->d2.angle_deg());
            std::vector<int> cls(n, -1);
            const std::vector<Index>* parts[4] = {&q->a, &q->b, &q->c, &q->d};
            for (int k = 0; k < 4; ++k)
                for (Index i : *parts[k]) cls[i] = cls[i] == -1 ? k : 9;
            for (std::size_t k = 0; k < n && why.empty(); ++k) {
                const int expect = c1[k] ? (c2[k] ? 0 : 1) : (c2[k] ? 2 : 3);
                if (cls[order[k]] != expect) why = "classification mismatch";
            }
            if (q->a.size() + q->d.size() > n / 2 + 1) why = "|Pa|+|Pd| too large";
            if (q->b.size() + q->c.size() > (n + 1) / 2 + 1) why = "|Pb|+|Pc| too large";
        }
        if (!why.empty() && o.pass) {
            o.pass = false;
            o.detail = fmt("seed %llu n=%zu: %s", (unsigned long long)s, n, why.c_str());
        }
    }
    if (o.pass) o.detail = fmt("%zu sets (n<=200), all balanced and partitioning", sets);
    return o;
}

Outcome criterion6() {
    PairStats st;
    std::size_t verified = 0, skipped = 0;
    for (std::size_t side : {5, 10, 20}) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const auto ps = lattice_generator(side, side, 0.05, 700 + 10 * side + s);
            const auto g = gabriel_graph(ps);
            if (!is_gabriel_triangulation(g)) {
                ++skipped;
                continue;
            }
            ++verified;
            if (side <= 10) {
                all_pairs(g, st);
            } else {
                const ThetaRouter router(g);
                Rng rng(800 + s);
                for (int k = 0; k < 1000; ++k) {
                    const Index a = rng.below(ps.size());
                    Index b = rng.below(ps.size() - 1);
                    if (b >= a) ++b;
                    check_pair(router, a, b, st);
                }
            }
        }
    }
    const bool ok = st.failures == 0 && verified > 0;
    return {ok, fmt("%zu verified Gabriel triangulations (%zu not), %zu pairs, %zu failures %s", verified, skipped,
                    st.pairs, st.failures, st.first_failure.c_str())};
}

Outcome criterion7() {
    return {detours.violations == 0 && detours.count > 0,
            fmt("%zu witnesses, max detour %.6f, %zu above %.6f", detours.count, detours.max, detours.violations,
                kDetourBound)};
}

Outcome criterion8() {
    Outcome o;
    std::size_t missing = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t n = 4 + s % 97;
        const auto ps = gen_convex(n, 900 + s);
        const auto g = build_convex(ps);
        missing += necessity_check(ps, g).size();
        // Independent Gabriel oracle on the same set.
        for (const Edge& e : oracle::gabriel_edges({ps.points().begin(), ps.points().end()}, 0.0))
            if (!g.has_edge(e.u, e.v)) ++missing;
    }
    o.pass = missing == 0;
    o.detail = fmt("100 sets (n<=100), %zu missing Gabriel edges", missing);
    return o;
}

// Small sets whose Gabriel graph is a Gabriel triangulation: jittered
// lattices, then rejection-sampled uniform sets.
std::vector<PointSet> small_gabriel_sets(std::size_t count) {
    std::vector<PointSet> out;
    const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
    for (std::uint64_t s = 0; out.size() < count / 2; ++s) {
        const auto [r, c] = shapes[s % 5];
        auto ps = lattice_generator(r, c, 0.1, 1000 + s);
        if (is_gabriel_triangulation(gabriel_graph(ps))) out.push_back(std::move(ps));
    }
    for (std::uint64_t s = 0; out.size() < count; ++s) {
        auto ps = gen_uniform(3 + s % 6, 2000 + s);
        if (is_gabriel_triangulation(gabriel_graph(ps))) out.push_back(std::move(ps));
    }
    return out;
}

Outcome criterion9() {
    std::size_t pairs = 0, disagree = 0, exhaustive_only = 0;
    for (const auto& ps : small_gabriel_sets(200)) {
        const auto g = gabriel_graph(ps);
        const ThetaRouter router(g);
        for (Index s = 0; s < ps.size(); ++s) {
            for (Index t = 0; t < ps.size(); ++t) {
                if (s == t) continue;
                ++pairs;
                const bool r = router.route(s, t).has_value();
                const bool e = exhaustive_increasing_chord_search(g, s, t).has_value();
                if (r && !e) ++disagree;
                if (e && !r) ++exhaustive_only;
            }
        }
    }
    std::size_t paths = 0, borderline = 0, mismatch = 0, positives = 0;
    Rng rng(31);
    while (paths < 10000) {
        // Three families: theta-walks, turning walks, and uniform vertex sequences.
        std::vector<Point> path;
        if (paths % 3 == 0) {
            path = oracle::random_theta_path(rng, 2 + rng.below(6), rng.uniform(0, 360));
        } else if (paths % 3 == 1) {
            path = oracle::random_path(rng, 2 + rng.below(6));
        } else {
            for (std::size_t k = 0, m = 3 + rng.below(5); k < m; ++k) path.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        }
        ++paths;
        if (std::abs(oracle::worst_margin(path)) < kBorderlineMargin) {
            ++borderline;
            continue;
        }
        const bool fast = is_self_approaching(path);
        positives += fast;
        if (fast != oracle::sampled_self_approaching(path, 500, paths)) ++mismatch;
    }
    return {disagree == 0 && mismatch == 0,
            fmt("200 sets: %zu pairs, %zu route-only (exhaustive-only %zu); %zu paths (%zu self-approaching, "
                "%zu borderline set aside), %zu dot/sampled mismatches",
                pairs, disagree, exhaustive_only, paths, positives, borderline, mismatch)};
}

Outcome criterion10() {
    std::size_t ok = 0, verified = 0, steiner = 0;
    std::string bad, failures;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::size_t n = 5 + s % 36;
        const auto ps = gen_uniform(n, 1000 + s);
        const std::size_t budget = default_max_rounds(n);
        const auto res = augment_heuristic(ps, budget, s);
        bool subset = res.augmented.size() >= n && res.rounds <= budget;
        for (Index i = 0; i < n && subset; ++i) subset = res.augmented[i] == ps[i];
        if (!subset && bad.empty()) bad = fmt("seed %llu: original points not kept or budget exceeded", (unsigned long long)s);
        if (!res.succeeded) {
            failures += fmt(" %llu", (unsigned long long)s);
            continue;
        }
        ++ok;
        steiner += res.steiner_count;
        const GeomGraph& g = res.triangulation.graph;
        if (!(g.points() == res.augmented) || !is_gabriel_triangulation(g)) {
            if (bad.empty()) bad = fmt("seed %llu: reported success fails re-verification", (unsigned long long)s);
            continue;
        }
        const ThetaRouter router(g);
        PairStats st;
        Rng rng(5000 + s);
        for (int k = 0; k < 500; ++k) {
            const Index a = rng.below(g.num_vertices());
            Index b = rng.below(g.num_vertices() - 1);
            if (b >= a) ++b;
            check_pair(router, a, b, st);
        }
        if (st.failures == 0) {
            ++verified;
        } else if (bad.empty()) {
            bad = fmt("seed %llu: routing %s", (unsigned long long)s, st.first_failure.c_str());
        }
    }
    const double rate = ok / 50.0;
    return {rate >= kSteinerSuccessRate && verified == ok && bad.empty(),
            fmt("%zu/50 succeeded (need %.0f%%), %zu re-verified, mean %.1f Steiner points%s%s%s", ok,
                100 * kSteinerSuccessRate, verified, ok ? double(steiner) / double(ok) : 0.0,
                failures.empty() ? "" : "; failed seeds:", failures.c_str(), bad.empty() ? "" : ("; " + bad).c_str())};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0: no runtime limit
        std::function<Outcome()> run;
    };
    const Criterion all[] = {
        {1, "one-sided edge count", 10, criterion1},
        {2, "one-sided increasing-chord routes", 120, criterion2},
        {3, "convex edge budget", 60, criterion3},
        {4, "convex all-pairs routes", 300, criterion4},
        {5, "balanced partitions", 60, criterion5},
        {6, "Gabriel triangulation routes", 300, criterion6},
        {7, "detour bound", 0, criterion7},
        {8, "Gabriel edges necessary", 0, criterion8},
        {9, "oracle equivalence", 0, criterion9},
        {10, "Steiner augmentation", 0, criterion10},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) {
            o.pass = false;
            o.detail += fmt(" [over the %.0f s limit]", c.limit_s);
        }
        failed += !o.pass;
        std::printf("criterion %2d %s: %s -- %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
