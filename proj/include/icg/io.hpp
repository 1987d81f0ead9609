#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "icg/geom.hpp"
#include "icg/path_oracle.hpp"

namespace icg {

// Point files: '#' comment lines, then one "x y" pair per line. Values are
// written in shortest round-trip form. Parse errors name the 1-based line.
PointSet parse_points(std::string_view text);
std::string format_points(const PointSet& ps);
PointSet read_points(const std::filesystem::path& path);
void write_points(const PointSet& ps, const std::filesystem::path& path);

// Graph files: {"points":[[x,y],...],"edges":[[i,j],...]} with i < j and
// edges sorted. The writer is canonical: equal graphs give equal bytes.
GeomGraph parse_graph(std::string_view text);
std::string format_graph(const GeomGraph& g);
GeomGraph read_graph(const std::filesystem::path& path);
void write_graph(const GeomGraph& g, const std::filesystem::path& path);

// SVG 1.1 drawing: points as circles, edges as lines, the optional witness as
// separate highlighted strokes. The view box is the bounding box plus 5%.
std::string render_svg(const GeomGraph& g, std::span<const Index> highlight = {});
void write_svg(const GeomGraph& g, std::span<const Index> highlight, const std::filesystem::path& path);

// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

} // namespace icg
