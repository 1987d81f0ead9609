#include "icg/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace icg {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw Error(ErrorKind::Parse, msg.str());
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

bool parse_double(std::string_view tok, double& out) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw Error(ErrorKind::Internal, "cannot format number");
    return std::string(buf, ptr);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

PointSet parse_points(std::string_view text) {
    std::vector<Point> pts;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) parse_error(line_no, "expected two numbers");
        const std::string_view xs = line.substr(0, sep);
        const std::string_view ys = trim(line.substr(sep));
        if (ys.find_first_of(" \t") != std::string_view::npos) parse_error(line_no, "expected two numbers");
        Point p;
        if (!parse_double(xs, p.x) || !parse_double(ys, p.y)) {
            parse_error(line_no, "not a number: '" + std::string(line) + "'");
        }
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) parse_error(line_no, "non-finite coordinate");
        pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

std::string format_points(const PointSet& ps) {
    std::string out;
    for (const Point& p : ps) {
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

PointSet read_points(const std::filesystem::path& path) { return parse_points(read_file(path)); }

void write_points(const PointSet& ps, const std::filesystem::path& path) { write_file(path, format_points(ps)); }

GeomGraph parse_graph(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    auto schema = [](const std::string& what) { throw Error(ErrorKind::Parse, "schema: " + what); };
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("edges")) {
        schema("expected an object with \"points\" and \"edges\"");
    }
    const json& jp = doc["points"];
    const json& je = doc["edges"];
    if (!jp.is_array() || !je.is_array()) schema("\"points\" and \"edges\" must be arrays");

    std::vector<Point> pts;
    pts.reserve(jp.size());
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const json& p = jp[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            schema("points[" + std::to_string(i) + "] must be [x, y]");
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    std::vector<Edge> edges;
    edges.reserve(je.size());
    for (std::size_t k = 0; k < je.size(); ++k) {
        const json& e = je[k];
        const std::string where = "edges[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            schema(where + " must be [i, j] with non-negative integers");
        }
        const auto i = e[0].get<std::uint64_t>(), j = e[1].get<std::uint64_t>();
        if (i >= pts.size() || j >= pts.size()) {
            throw Error(ErrorKind::InvalidArgument, where + ": vertex index out of range");
        }
        if (i >= j) {
            std::ostringstream msg;
            msg << where << " = [" << i << "," << j << "] is not normalized; write it as [" << std::min(i, j) << ","
                << std::max(i, j) << "]";
            schema(msg.str());
        }
        edges.push_back({static_cast<Index>(i), static_cast<Index>(j)});
        if (k > 0 && !(edges[k - 1] < edges[k])) {
            schema(where + " breaks the sorted order or repeats an edge");
        }
    }
    return GeomGraph(PointSet(std::move(pts)), std::move(edges));
}

std::string format_graph(const GeomGraph& g) {
    std::string out = "{\"points\":[";
    const auto& ps = g.points();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += format_double(ps[i].x);
        out += ',';
        out += format_double(ps[i].y);
        out += ']';
    }
    out += "],\"edges\":[";
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        if (k) out += ',';
        out += '[' + std::to_string(g.edges()[k].u) + ',' + std::to_string(g.edges()[k].v) + ']';
    }
    out += "]}\n";
    return out;
}

GeomGraph read_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

void write_graph(const GeomGraph& g, const std::filesystem::path& path) { write_file(path, format_graph(g)); }

std::string render_svg(const GeomGraph& g, std::span<const Index> highlight) {
    const auto& ps = g.points();
    for (Index i : highlight) {
        if (i >= ps.size()) throw Error(ErrorKind::InvalidArgument, "highlight vertex out of range");
    }
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    if (!ps.empty()) {
        x0 = x1 = ps[0].x;
        y0 = y1 = ps[0].y;
        for (const Point& p : ps) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    }
    double w = x1 - x0, h = y1 - y0;
    const double span = std::max({w, h, 1e-9});
    if (w <= 0) w = span;
    if (h <= 0) h = span;
    const double mx = 0.05 * w, my = 0.05 * h;
    const double r = 0.006 * span;
    // Flip y so the drawing matches the usual mathematical orientation.
    auto X = [&](double x) { return format_double(x); };
    auto Y = [&](double y) { return format_double(-y); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << X(x0 - mx) << ' '
      << format_double(-(y1 + my)) << ' ' << format_double(w + 2 * mx) << ' ' << format_double(h + 2 * my) << "\">\n";
    if (!g.edges().empty()) {
        s << "<g stroke=\"#444\" stroke-width=\"" << format_double(0.25 * r) << "\">\n";
        for (const Edge& e : g.edges()) {
            s << "<line x1=\"" << X(ps[e.u].x) << "\" y1=\"" << Y(ps[e.u].y) << "\" x2=\"" << X(ps[e.v].x)
              << "\" y2=\"" << Y(ps[e.v].y) << "\"/>\n";
        }
        s << "</g>\n";
    }
    if (highlight.size() >= 2) {
        s << "<g stroke=\"#d62728\" stroke-width=\"" << format_double(0.8 * r) << "\" class=\"witness\">\n";
        for (std::size_t k = 0; k + 1 < highlight.size(); ++k) {
            const Point a = ps[highlight[k]], b = ps[highlight[k + 1]];
            s << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
              << "\"/>\n";
        }
        s << "</g>\n";
    }
    if (!ps.empty()) {
        s << "<g fill=\"#1f77b4\">\n";
        for (const Point& p : ps) {
            s << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << format_double(r) << "\"/>\n";
        }
        s << "</g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

void write_svg(const GeomGraph& g, std::span<const Index> highlight, const std::filesystem::path& path) {
    write_file(path, render_svg(g, highlight));
}

} // namespace icg
