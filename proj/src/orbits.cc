#include "hg4/orbits.h"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <stdexcept>

namespace hg4 {

namespace {

constexpr std::array<char, 4> kCacheMagic{'H', 'G', '4', 'O'};
constexpr uint32_t kCacheVersion = 1;

void write_u32(std::ostream &out, uint32_t v) {
    for (int k = 0; k < 4; k++) {
        out.put(static_cast<char>((v >> (8 * k)) & 0xFF));
    }
}

bool read_u32(std::istream &in, uint32_t &v) {
    v = 0;
    for (int k = 0; k < 4; k++) {
        const int c = in.get();
        if (c == EOF) {
            return false;
        }
        v |= static_cast<uint32_t>(c) << (8 * k);
    }
    return true;
}

}  // namespace

std::vector<HypergraphCode> generator_images(HypergraphCode h) {
    std::vector<HypergraphCode> out;
    out.reserve(2 * kNumVertices + 24);
    for (int v = 1; v <= kNumVertices; v++) {
        out.push_back(apply_x(h, v));
    }
    for (int v = 1; v <= kNumVertices; v++) {
        out.push_back(apply_z(h, v));
    }
    for (const Permutation &p : Permutation::all()) {
        out.push_back(permute(h, p));
    }
    return out;
}

OrbitTable enumerate_orbits() {
    // Adjacent transpositions generate the symmetric group, so they suffice for the closure.
    const std::array<Permutation, 3> swaps{Permutation::transposition(1, 2), Permutation::transposition(2, 3),
                                           Permutation::transposition(3, 4)};
    constexpr uint16_t kUnvisited = 0xFFFF;

    std::vector<uint16_t> class_id(kNumCodes, kUnvisited);
    std::deque<HypergraphCode> frontier;
    uint16_t next_id = 0;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        if (class_id[c] != kUnvisited) {
            continue;
        }
        const uint16_t id = next_id++;
        class_id[c] = id;
        frontier.push_back(HypergraphCode(c));
        while (!frontier.empty()) {
            const HypergraphCode h = frontier.front();
            frontier.pop_front();
            auto visit = [&](HypergraphCode g) {
                if (class_id[g.bits] == kUnvisited) {
                    class_id[g.bits] = id;
                    frontier.push_back(g);
                }
            };
            for (int v = 1; v <= kNumVertices; v++) {
                visit(apply_x(h, v));
                visit(apply_z(h, v));
            }
            for (const Permutation &p : swaps) {
                visit(permute(h, p));
            }
        }
    }
    return table_from_class_ids(std::move(class_id));
}

OrbitTable table_from_class_ids(std::vector<uint16_t> class_id) {
    if (class_id.size() != kNumCodes) {
        throw std::invalid_argument("class_id must cover all 32768 codes");
    }
    OrbitTable t;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const uint16_t id = class_id[c];
        if (id == t.reps.size()) {
            t.reps.push_back(HypergraphCode(c));
            t.sizes.push_back(0);
            t.rep_rank.push_back(rank(standardize(HypergraphCode(c))));
        } else if (id > t.reps.size()) {
            throw std::invalid_argument("orbit ids must first appear in ascending code order");
        }
        t.sizes[id]++;
    }
    t.class_id = std::move(class_id);
    return t;
}

bool closed_under_generators(const OrbitTable &table) {
    for (uint32_t c = 0; c < kNumCodes; c++) {
        for (HypergraphCode g : generator_images(HypergraphCode(c))) {
            if (table.class_id[g.bits] != table.class_id[c]) {
                return false;
            }
        }
    }
    return true;
}

OrbitRecord orbit_of(const OrbitTable &table, HypergraphCode h) {
    OrbitRecord r;
    r.orbit_id = table.class_id.at(h.bits);
    r.rep = table.reps[r.orbit_id];
    r.size = table.sizes[r.orbit_id];
    r.rank = table.rep_rank[r.orbit_id];
    if (r.rank == 4) {
        r.m = static_cast<int>(r.size / 256);
    } else if (r.rank == 3) {
        r.m = static_cast<int>(r.size / 128);
    }
    return r;
}

RankCensus rank_census(const OrbitTable &table) {
    RankCensus census;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const int id = table.class_id[c];
        const int r = table.rep_rank[id];
        if (rank(standardize(HypergraphCode(c))) != r) {
            throw std::logic_error("orbit " + std::to_string(id) + " mixes standardized ranks (code " +
                                   std::to_string(c) + ")");
        }
        if (r == 4) {
            census.rank4++;
        } else if (r == 3) {
            census.rank3++;
        } else {
            census.graphs++;
        }
    }
    for (int r : table.rep_rank) {
        if (r == 4) {
            census.rank4_orbits++;
        } else if (r == 3) {
            census.rank3_orbits++;
        } else {
            census.graph_orbits++;
        }
    }
    return census;
}

std::vector<HypergraphCode> orbit_members(const OrbitTable &table, int orbit_id) {
    std::vector<HypergraphCode> out;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        if (table.class_id[c] == orbit_id) {
            out.push_back(HypergraphCode(c));
        }
    }
    return out;
}

void save_orbit_cache(const std::filesystem::path &path, const OrbitTable &table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open orbit cache for writing: " + path.string());
    }
    out.write(kCacheMagic.data(), kCacheMagic.size());
    write_u32(out, kCacheVersion);
    write_u32(out, static_cast<uint32_t>(table.class_id.size()));
    for (uint16_t id : table.class_id) {
        out.put(static_cast<char>(id & 0xFF));
        out.put(static_cast<char>(id >> 8));
    }
    if (!out) {
        throw std::runtime_error("failed writing orbit cache: " + path.string());
    }
}

std::optional<OrbitTable> load_orbit_cache(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    uint32_t version = 0;
    uint32_t count = 0;
    if (!in || magic != kCacheMagic || !read_u32(in, version) || version != kCacheVersion ||
        !read_u32(in, count) || count != kNumCodes) {
        return std::nullopt;
    }
    std::vector<uint16_t> class_id(kNumCodes);
    for (uint16_t &id : class_id) {
        const int lo = in.get();
        const int hi = in.get();
        if (lo == EOF || hi == EOF) {
            return std::nullopt;
        }
        id = static_cast<uint16_t>(lo | (hi << 8));
    }
    if (in.peek() != EOF) {
        return std::nullopt;
    }
    try {
        OrbitTable table = table_from_class_ids(std::move(class_id));
        if (!closed_under_generators(table)) {
            return std::nullopt;
        }
        return table;
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    }
}

OrbitTable load_or_build_orbits(const std::filesystem::path &path) {
    if (auto cached = load_orbit_cache(path)) {
        return *std::move(cached);
    }
    OrbitTable table = enumerate_orbits();
    save_orbit_cache(path, table);
    return table;
}

}  // namespace hg4
