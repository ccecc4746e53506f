#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlper/lattice.hpp"
#include "nlper/zeta.hpp"

namespace nlper {

// Largest area accepted by the exhaustive enumerators.
inline constexpr int kEnumerationCap = 12;

// Redelmeier's algorithm: every fixed edge-connected polyomino of area n is
// passed to `visit` exactly once, in canonical translation. Throws
// AreaTooLarge above the cap and InvalidArgument for n < 1.
void for_each_connected(int n, const std::function<void(const Polyomino&)>& visit);
std::vector<Polyomino> enumerate_connected(int n);

// Independent second strategy: level-by-level cell addition with a sorted set
// of canonical forms removing duplicates. Slower, used to cross-check counts.
std::vector<Polyomino> enumerate_by_growth(int n);

struct EnumerationReport {
    int n = 0;
    double lambda = 0.0;
    std::uint64_t count_connected = 0;
    double global_min = 0.0;   // over connected shapes
    double catalog_min = 0.0;  // over the minimizer catalog
    std::vector<Polyomino> argmin_orbits;  // orbit representatives, sorted
    bool verified_against_catalog = false;
    std::uint64_t disconnected_samples = 0;
    std::optional<double> min_disconnected;
};

// Exhausts the connected shapes of area n, then samples two-component
// configurations in a 3n x 3n box. Throws TheoremViolation with the offending
// shape when some shape outside the catalog orbits comes within kMargin of the
// catalog minimum, or a disconnected sample does not exceed it. Every placement
// of a protuberance along its side counts as a catalog shape. Area 1 admits no
// disconnected configuration, so no samples are drawn there.
EnumerationReport verify_theorem(int n, const ZetaEngine& e, std::uint64_t seed = 0,
                                 int samples = 1000);

struct ReductionReport {
    int n = 0;
    double lambda = 0.0;
    std::uint64_t checked = 0;   // shapes outside the extended catalog
    std::uint64_t skipped = 0;   // shapes inside it
    std::vector<Polyomino> violations;  // no strict decrease, or cap hit
    std::uint64_t cap_hits = 0;
    std::optional<double> max_decrease, min_decrease;
    std::map<std::string, std::uint64_t> step_counts;  // label -> number of traces using it
};

ReductionReport verify_reduction_consistency(int n, const ZetaEngine& e);

}  // namespace nlper
