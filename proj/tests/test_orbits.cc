#include "hg4/orbits.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <unistd.h>

namespace hg4 {
namespace {

namespace fs = std::filesystem;

class UnionFind {
   public:
    explicit UnionFind(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    uint32_t find(uint32_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void merge(uint32_t a, uint32_t b) {
        parent_[find(a)] = find(b);
    }

   private:
    std::vector<uint32_t> parent_;
};

const OrbitTable &table() {
    static const OrbitTable t = enumerate_orbits();
    return t;
}

fs::path temp_path(const std::string &name) {
    return fs::temp_directory_path() / ("hg4_test_" + name + "_" + std::to_string(::getpid()));
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

TEST(Orbits, AgreeWithUnionFindOverAllGenerators) {
    UnionFind uf(kNumCodes);
    for (uint32_t c = 0; c < kNumCodes; c++) {
        for (HypergraphCode g : generator_images(HypergraphCode(c))) {
            uf.merge(c, g.bits);
        }
    }
    const OrbitTable &t = table();
    ASSERT_EQ(t.class_id.size(), kNumCodes);
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const uint32_t rep = t.reps[t.class_id[c]].bits;
        ASSERT_EQ(uf.find(c), uf.find(rep)) << c;
    }
    std::vector<uint32_t> roots;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        roots.push_back(uf.find(c));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    EXPECT_EQ(roots.size(), t.num_orbits());
}

TEST(Orbits, CountsSizesAndRepresentatives) {
    const OrbitTable &t = table();
    EXPECT_EQ(t.num_orbits(), 39u);
    uint32_t total = 0;
    for (size_t id = 0; id < t.num_orbits(); id++) {
        total += t.sizes[id];
        EXPECT_EQ(kGroupOrder % t.sizes[id], 0u);
        const std::vector<HypergraphCode> members = orbit_members(t, static_cast<int>(id));
        ASSERT_EQ(members.size(), t.sizes[id]);
        EXPECT_EQ(members.front(), t.reps[id]);
        EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
        EXPECT_FALSE(t.reps[id].has_loops());
        if (id > 0) {
            EXPECT_LT(t.reps[id - 1], t.reps[id]);
        }
    }
    EXPECT_EQ(total, kNumCodes);
    EXPECT_TRUE(closed_under_generators(t));
}

TEST(Orbits, MultiplicitiesMatchTables) {
    std::vector<int> m4;
    std::vector<int> m3;
    const OrbitTable &t = table();
    for (size_t id = 0; id < t.num_orbits(); id++) {
        const OrbitRecord r = orbit_of(t, t.reps[id]);
        if (r.rank == 4) {
            ASSERT_TRUE(r.m.has_value());
            EXPECT_EQ(r.size, 256u * *r.m);
            m4.push_back(*r.m);
        } else if (r.rank == 3) {
            ASSERT_TRUE(r.m.has_value());
            EXPECT_EQ(r.size, 128u * *r.m);
            m3.push_back(*r.m);
        } else {
            EXPECT_FALSE(r.m.has_value());
        }
    }
    EXPECT_EQ(sorted(m4), sorted({1, 6, 3, 12, 12, 4, 4, 3, 12, 6, 1}));
    EXPECT_EQ(sorted(m3), sorted({4, 12, 12, 4, 6, 6, 12, 12, 6, 6, 4, 12, 12, 4, 1, 6, 1}));
    EXPECT_EQ(std::accumulate(m3.begin(), m3.end(), 0), 120);
}

TEST(Orbits, Census) {
    const RankCensus c = rank_census(table());
    EXPECT_EQ(c.rank4, 16384u);
    EXPECT_EQ(c.rank3, 15360u);
    EXPECT_EQ(c.graphs, 1024u);
    EXPECT_EQ(c.total(), kNumCodes);
    EXPECT_EQ(c.rank4_orbits, 11u);
    EXPECT_EQ(c.rank3_orbits, 17u);
    EXPECT_EQ(c.graph_orbits, 11u);
}

TEST(Orbits, WorkedExampleRecord) {
    const OrbitRecord r = orbit_of(table(), parse_edges("1234,123"));
    EXPECT_EQ(r.size, 256u);
    EXPECT_EQ(r.rank, 4);
    EXPECT_EQ(r.m, 1);
    EXPECT_EQ(format_edges(r.rep), "1234");
}

TEST(Orbits, RejectsMalformedClassIds) {
    EXPECT_THROW(table_from_class_ids(std::vector<uint16_t>(10, 0)), std::invalid_argument);
    std::vector<uint16_t> ids(kNumCodes, 0);
    ids[1] = 2;
    EXPECT_THROW(table_from_class_ids(ids), std::invalid_argument);
}

TEST(OrbitCache, RoundTrip) {
    const fs::path path = temp_path("cache");
    save_orbit_cache(path, table());
    EXPECT_EQ(fs::file_size(path), 12u + 2u * kNumCodes);
    const std::optional<OrbitTable> loaded = load_orbit_cache(path);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(loaded->class_id, table().class_id);
    EXPECT_EQ(loaded->reps, table().reps);
    EXPECT_EQ(loaded->sizes, table().sizes);
    fs::remove(path);
}

TEST(OrbitCache, RejectsDamagedFiles) {
    const fs::path path = temp_path("damaged");
    EXPECT_FALSE(load_orbit_cache(path).has_value());

    save_orbit_cache(path, table());
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(0);
        f.put('X');
    }
    EXPECT_FALSE(load_orbit_cache(path).has_value());

    save_orbit_cache(path, table());
    fs::resize_file(path, fs::file_size(path) - 1);
    EXPECT_FALSE(load_orbit_cache(path).has_value());

    // A valid header over a partition that is not closed: every code its own orbit.
    OrbitTable fake;
    fake.class_id.assign(kNumCodes, 0);
    for (uint32_t c = 0; c < kNumCodes; c++) {
        fake.class_id[c] = static_cast<uint16_t>(c);
    }
    save_orbit_cache(path, fake);
    EXPECT_FALSE(load_orbit_cache(path).has_value());

    const OrbitTable rebuilt = load_or_build_orbits(path);
    EXPECT_EQ(rebuilt.class_id, table().class_id);
    EXPECT_TRUE(load_orbit_cache(path).has_value());
    fs::remove(path);
}

TEST(OrbitCache, UnwritablePathNamesIt) {
    try {
        save_orbit_cache("/nonexistent-dir/orbits.bin", table());
        FAIL() << "expected an exception";
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/orbits.bin"), std::string::npos);
    }
}

}  // namespace
}  // namespace hg4
