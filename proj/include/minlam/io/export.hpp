#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minlam/io/mesh.hpp"

namespace minlam::io {

enum class MeshFormat { obj, ply, csv };

MeshFormat parse_mesh_format(std::string_view name);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

/// Fixed 9 significant digits, for geometry-only outputs.
std::string format_geometry(double value);

/// Writes the mesh and returns the number of bytes emitted. Throws SinkFailure
/// when the stream rejects the write.
std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, std::ostream& sink);

inline constexpr std::string_view kCsvHeader = "x,y,F1,F2,F3,u,v,K";

/// CSV table with kCsvHeader columns, one row per sample.
std::size_t export_samples_csv(std::span<const SurfaceSample<double>> samples, std::ostream& sink);

using CsvRow = std::array<double, 8>;

/// Parses a table written by export_samples_csv.
std::vector<CsvRow> parse_samples_csv(std::istream& source);

}  // namespace minlam::io
