#ifndef IRPOLY_CENSUS_HPP
#define IRPOLY_CENSUS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "irpoly/canonical.hpp"
#include "irpoly/planar_graph.hpp"
#include "irpoly/volume.hpp"

namespace irpoly {

// Volumes within this distance are treated as equal everywhere (dedup,
// classification against reference values, spectrum cutoff).
inline constexpr double kVolumeResolution = 1e-6;

struct Classification {
    bool is_antiprism = false;
    bool is_twisted_antiprism = false;
    bool is_itr = false;
};

Classification classify(const PlanarGraph& g);

// One enumerated polyhedron with its computed data; what the census files
// store, one JSON object per line, volumes as 9-significant-digit strings.
struct CensusRecord {
    CanonicalCode code;
    int faces = 0;
    int vertices = 0;
    std::map<int, int> face_vector;
    double volume = 0.0;
    Classification cls;
};

std::string to_json_line(const CensusRecord& r);
CensusRecord census_record_from_json(const std::string& line);

// Enumerate to max_faces and compute volume + classification per type,
// parallelized over `jobs` threads.  Records come back sorted by (faces,
// canonical code); graphs[i] is the polyhedron of records[i].
struct Census {
    std::vector<CensusRecord> records;
    std::vector<PlanarGraph> graphs;
    int complete_to = 0; // face count the enumeration fully covered
};

Census build_census(int max_faces, int jobs = 1, std::ostream* progress = nullptr);

// Number format used for every serialized volume: 9 significant digits.
std::string format_volume(double v);

// Sorted distinct volumes (dedup at kVolumeResolution).  Makes no
// completeness claim about the tail of the list.
std::vector<double> distinct_volumes(const std::vector<CensusRecord>& records);

// Sorted distinct volumes up to and including `cutoff`.  The result is
// provably the full volume spectrum up to the cutoff: every face count whose
// Atkinson lower bound (F - 4) v8 / 4 lies below the cutoff must be covered
// by the census (complete_to), otherwise CensusIncompleteError lists the
// missing face counts.
std::vector<double> volume_spectrum(const std::vector<CensusRecord>& records,
                                    double cutoff, int complete_to);

// Largest cutoff volume_spectrum accepts for a census complete to this face
// count: the Atkinson lower bound for the first uncovered face count.
double spectrum_cutoff_limit(int complete_to);

} // namespace irpoly

#endif
