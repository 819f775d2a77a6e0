#include "irpoly/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "irpoly/enumeration.hpp"
#include "irpoly/gluing.hpp"
#include "irpoly/lobachevsky.hpp"

namespace irpoly {

namespace {

// reference codes for the antiprism families, keyed by n
const CanonicalCode& antiprism_code(int n) {
    static std::map<int, CanonicalCode> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, canonical_code(antiprism(n))).first;
    return it->second;
}

const CanonicalCode& twisted_antiprism_code(int n) {
    static std::map<int, CanonicalCode> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, canonical_code(twisted_antiprism(n))).first;
    return it->second;
}

} // namespace

Classification classify(const PlanarGraph& g) {
    Classification c;
    const int faces = trace_faces(g).face_count();
    const CanonicalCode code = canonical_code(g);
    if (faces >= 8 && faces % 2 == 0) {
        const int n = (faces - 2) / 2;
        if (g.vertex_count() == 2 * n) c.is_antiprism = (code == antiprism_code(n));
    }
    if (faces >= 11 && faces % 2 == 1) {
        const int n = (faces - 3) / 2;
        if (n >= 4 && g.vertex_count() == 2 * n + 1)
            c.is_twisted_antiprism = (code == twisted_antiprism_code(n));
    }
    c.is_itr = is_itr(g);
    return c;
}

std::string format_volume(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string to_json_line(const CensusRecord& r) {
    nlohmann::json j;
    j["code"] = r.code.hex();
    j["faces"] = r.faces;
    j["vertices"] = r.vertices;
    nlohmann::json fv = nlohmann::json::object();
    for (const auto& [len, count] : r.face_vector) fv[std::to_string(len)] = count;
    j["face_vector"] = std::move(fv);
    j["volume"] = format_volume(r.volume);
    j["antiprism"] = r.cls.is_antiprism;
    j["twisted_antiprism"] = r.cls.is_twisted_antiprism;
    j["itr"] = r.cls.is_itr;
    return j.dump();
}

CensusRecord census_record_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid census line: ") + e.what(), e.byte);
    }
    CensusRecord r;
    try {
        r.code = CanonicalCode::from_hex(j.at("code").get<std::string>());
        r.faces = j.at("faces").get<int>();
        r.vertices = j.at("vertices").get<int>();
        for (const auto& [key, value] : j.at("face_vector").items())
            r.face_vector[std::stoi(key)] = value.get<int>();
        r.volume = std::stod(j.at("volume").get<std::string>());
        r.cls.is_antiprism = j.value("antiprism", false);
        r.cls.is_twisted_antiprism = j.value("twisted_antiprism", false);
        r.cls.is_itr = j.value("itr", false);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("census line missing field: ") + e.what(), 0);
    }
    return r;
}

Census build_census(int max_faces, int jobs, std::ostream* progress) {
    Census census;
    census.complete_to = max_faces;
    if (jobs < 1) jobs = 1;

    std::vector<CanonicalCode> codes;
    enumerate_polyhedra(
        max_faces,
        [&](const PlanarGraph& g, const CanonicalCode& code) {
            census.graphs.push_back(g);
            codes.push_back(code);
        },
        jobs, progress);

    census.records.resize(census.graphs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= census.graphs.size()) return;
            const PlanarGraph& g = census.graphs[i];
            const FaceStructure fs = trace_faces(g);
            CensusRecord& r = census.records[i];
            r.code = codes[i];
            r.faces = fs.face_count();
            r.vertices = g.vertex_count();
            r.face_vector = fs.face_vector;
            r.volume = ideal_volume(g);
            r.cls = classify(g);
        }
    };
    if (jobs == 1 || census.graphs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int k = std::min<std::size_t>(jobs, census.graphs.size());
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return census;
}

std::vector<double> distinct_volumes(const std::vector<CensusRecord>& records) {
    std::vector<double> v;
    v.reserve(records.size());
    for (const auto& r : records) v.push_back(r.volume);
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > kVolumeResolution) out.push_back(x);
    return out;
}

double spectrum_cutoff_limit(int complete_to) {
    // Atkinson lower bound of the first uncovered face count; cutoffs must
    // stay strictly below it
    return (std::max(complete_to + 1, 8) - 4) * octahedron_volume() / 4.0;
}

std::vector<double> volume_spectrum(const std::vector<CensusRecord>& records,
                                    double cutoff, int complete_to) {
    const double v8 = octahedron_volume();
    int required = 0;
    for (int f = 8; (f - 4) * v8 / 4.0 <= cutoff + kVolumeResolution; ++f) required = f;
    if (required > complete_to) {
        std::vector<int> missing;
        std::string list;
        for (int f = std::max(complete_to + 1, 8); f <= required; ++f) {
            missing.push_back(f);
            list += (list.empty() ? "" : ",") + std::to_string(f);
        }
        throw CensusIncompleteError(
            "spectrum cutoff " + format_volume(cutoff) +
                " needs census data for face counts {" + list +
                "}; polyhedra there can still reach volumes below the cutoff",
            std::move(missing));
    }
    std::vector<CensusRecord> kept;
    for (const auto& r : records)
        if (r.volume <= cutoff + kVolumeResolution) kept.push_back(r);
    return distinct_volumes(kept);
}

} // namespace irpoly
