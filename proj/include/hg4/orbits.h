#ifndef HG4_ORBITS_H
#define HG4_ORBITS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "hg4/hypercore.h"

namespace hg4 {

/// Partition of all 2^15 codes into orbits of the group generated by the local X and Z moves
/// and the vertex permutations. Orbit ids ascend with the canonical representative, which is
/// the numerically smallest code of the orbit.
struct OrbitTable {
    std::vector<uint16_t> class_id;
    std::vector<HypergraphCode> reps;
    std::vector<uint32_t> sizes;
    /// Rank of standardize(rep).
    std::vector<int> rep_rank;

    size_t num_orbits() const {
        return reps.size();
    }
};

struct OrbitRecord {
    int orbit_id = 0;
    HypergraphCode rep;
    uint32_t size = 0;
    int rank = 0;
    /// Orbit size / 256 for rank 4, / 128 for rank 3; absent otherwise.
    std::optional<int> m;
};

struct RankCensus {
    uint32_t rank4 = 0;
    uint32_t rank3 = 0;
    /// Codes whose orbit rank is 0, 1 or 2.
    uint32_t graphs = 0;
    uint32_t rank4_orbits = 0;
    uint32_t rank3_orbits = 0;
    uint32_t graph_orbits = 0;

    uint32_t total() const {
        return rank4 + rank3 + graphs;
    }
};

/// Order of the generated group: 16 Z patterns x 16 X patterns x 24 permutations.
constexpr uint32_t kGroupOrder = 16 * 16 * 24;

/// Every generator applied to `h`: X on each vertex, Z on each vertex, then all 24
/// permutations.
std::vector<HypergraphCode> generator_images(HypergraphCode h);

/// Breadth-first closure over the full code space.
OrbitTable enumerate_orbits();

/// True when every generator maps every code into its own orbit.
bool closed_under_generators(const OrbitTable &table);

OrbitRecord orbit_of(const OrbitTable &table, HypergraphCode h);

/// Codes per orbit rank. Throws std::logic_error if an orbit holds codes whose standardized
/// forms have different ranks.
RankCensus rank_census(const OrbitTable &table);

/// Orbit members, ascending.
std::vector<HypergraphCode> orbit_members(const OrbitTable &table, int orbit_id);

/// Cache layout (little-endian): "HG4O", uint32 version, uint32 entry count (32768), then one
/// uint16 orbit id per code. Throws std::runtime_error naming the path on I/O failure.
void save_orbit_cache(const std::filesystem::path &path, const OrbitTable &table);
/// Returns nullopt when the file is absent, its header does not match, or the stored
/// partition is not closed under the generators.
std::optional<OrbitTable> load_orbit_cache(const std::filesystem::path &path);
/// Loads the cache when valid; otherwise enumerates and rewrites it.
OrbitTable load_or_build_orbits(const std::filesystem::path &path);

/// Rebuilds reps/sizes/rep_rank from a class_id vector.
OrbitTable table_from_class_ids(std::vector<uint16_t> class_id);

}  // namespace hg4

#endif
