#include "minlam/io/export.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "minlam/core/errors.hpp"

namespace minlam::io {

MeshFormat parse_mesh_format(std::string_view name)
{
    if (name == "obj") {
        return MeshFormat::obj;
    }
    if (name == "ply") {
        return MeshFormat::ply;
    }
    if (name == "csv") {
        return MeshFormat::csv;
    }
    throw InvalidParameter("unknown mesh format '" + std::string(name) + "'");
}

std::string format_double(double value)
{
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string format_geometry(double value)
{
    char buffer[32];
    const int n = std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return std::string(buffer, static_cast<std::size_t>(n));
}

namespace {

std::size_t emit(const std::string& text, std::ostream& sink)
{
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    sink.flush();
    if (!sink) {
        throw SinkFailure("failed to write " + std::to_string(text.size()) + " bytes");
    }
    return text.size();
}

std::string obj_text(const SurfaceMesh& mesh)
{
    std::string out = "# minlam " + mesh.provenance.source + "\n";
    for (const auto& s : mesh.samples) {
        out += "v " + format_geometry(s.position.x()) + ' ' + format_geometry(s.position.y()) + ' ' +
               format_geometry(s.position.z()) + '\n';
    }
    for (const auto& t : mesh.triangles) {
        out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) + '\n';
    }
    return out;
}

std::string ply_text(const SurfaceMesh& mesh)
{
    std::string out = "ply\nformat ascii 1.0\ncomment minlam " + mesh.provenance.source + "\n";
    out += "element vertex " + std::to_string(mesh.samples.size()) + "\n";
    for (const char* name : {"x", "y", "z", "nx", "ny", "nz", "quality"}) {
        out += std::string("property double ") + name + "\n";
    }
    out += "element face " + std::to_string(mesh.triangles.size()) + "\n";
    out += "property list uchar int vertex_indices\nend_header\n";
    for (const auto& s : mesh.samples) {
        out += format_geometry(s.position.x()) + ' ' + format_geometry(s.position.y()) + ' ' +
               format_geometry(s.position.z()) + ' ' + format_geometry(s.normal.x()) + ' ' +
               format_geometry(s.normal.y()) + ' ' + format_geometry(s.normal.z()) + ' ' +
               format_geometry(s.second_fundamental_norm_sq) + '\n';
    }
    for (const auto& t : mesh.triangles) {
        out += "3 " + std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
    }
    return out;
}

std::string csv_text(std::span<const SurfaceSample<double>> samples)
{
    std::string out(kCsvHeader);
    out += "\r\n";
    for (const auto& s : samples) {
        const double row[] = {s.param.real(),    s.param.imag(),    s.position.x(),   s.position.y(),
                              s.position.z(),    s.exponent.real(), s.exponent.imag(), s.gauss_curvature};
        for (std::size_t i = 0; i < 8; ++i) {
            if (i) {
                out += ',';
            }
            out += format_double(row[i]);
        }
        out += "\r\n";
    }
    return out;
}

}  // namespace

std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, std::ostream& sink)
{
    if (!mesh.valid()) {
        throw InvalidParameter("refusing to export an invalid mesh");
    }
    switch (format) {
    case MeshFormat::obj:
        return emit(obj_text(mesh), sink);
    case MeshFormat::ply:
        return emit(ply_text(mesh), sink);
    case MeshFormat::csv:
        return emit(csv_text(mesh.samples), sink);
    }
    return 0;
}

std::size_t export_samples_csv(std::span<const SurfaceSample<double>> samples, std::ostream& sink)
{
    return emit(csv_text(samples), sink);
}

std::vector<CsvRow> parse_samples_csv(std::istream& source)
{
    std::string line;
    if (!std::getline(source, line)) {
        throw InvalidParameter("empty CSV");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw InvalidParameter("unexpected CSV header '" + line + "'");
    }
    std::vector<CsvRow> rows;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        CsvRow row{};
        const char* cursor = line.data();
        const char* end = line.data() + line.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto result = std::from_chars(cursor, end, row[i]);
            if (result.ec != std::errc{}) {
                throw InvalidParameter("malformed CSV row '" + line + "'");
            }
            cursor = result.ptr;
            if (i + 1 < row.size()) {
                if (cursor == end || *cursor != ',') {
                    throw InvalidParameter("malformed CSV row '" + line + "'");
                }
                ++cursor;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace minlam::io
