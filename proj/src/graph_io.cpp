#include "irpoly/graph_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace irpoly {

const char kPlanarCodeHeader[] = ">>planar_code<<";

void write_planar_code_header(std::ostream& out) { out << kPlanarCodeHeader; }

void write_planar_code(std::ostream& out, const PlanarGraph& g) {
    const int n = g.vertex_count();
    if (n > 255)
        throw DomainError("planar_code records are limited to 255 vertices; "
                          "use the JSON format for larger graphs");
    out.put(static_cast<char>(n));
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) out.put(static_cast<char>(u + 1));
        out.put(0);
    }
}

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {
    for (const char* p = kPlanarCodeHeader; *p; ++p, ++offset_) {
        const int c = in_.get();
        if (c != *p) throw FormatError("bad planar_code header", offset_);
    }
}

std::optional<PlanarGraph> PlanarCodeReader::next() {
    const int first = in_.get();
    if (first == std::istream::traits_type::eof()) return std::nullopt;
    const std::size_t record_start = offset_;
    ++offset_;
    const int n = first;
    if (n < 1) throw FormatError("invalid vertex count 0", record_start);

    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        for (;;) {
            const int b = in_.get();
            if (b == std::istream::traits_type::eof())
                throw FormatError("truncated record", offset_);
            if (b == 0) {
                ++offset_;
                break;
            }
            if (b > n)
                throw FormatError("neighbor index " + std::to_string(b) +
                                      " out of range (n = " + std::to_string(n) + ")",
                                  offset_);
            rot[v].push_back(b - 1);
            ++offset_;
        }
    }
    return PlanarGraph(std::move(rot));
}

std::vector<PlanarGraph> read_planar_code(std::istream& in) {
    PlanarCodeReader reader(in);
    std::vector<PlanarGraph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

std::string to_json(const PlanarGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    auto& rot = j["rotation"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (int u : g.neighbors(v)) row.push_back(u + 1);
        rot.push_back(std::move(row));
    }
    return j.dump();
}

PlanarGraph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("rotation"))
        throw FormatError("graph JSON needs \"vertices\" and \"rotation\"", 0);
    const int n = j["vertices"].get<int>();
    const auto& rows = j["rotation"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw FormatError("\"rotation\" must list one row per vertex", 0);
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        for (const auto& entry : rows[v]) {
            const int u = entry.get<int>();
            if (u < 1 || u > n)
                throw FormatError("neighbor index " + std::to_string(u) +
                                      " out of range (1-based, n = " + std::to_string(n) + ")",
                                  0);
            rot[v].push_back(u - 1);
        }
    }
    return PlanarGraph(std::move(rot));
}

} // namespace irpoly
