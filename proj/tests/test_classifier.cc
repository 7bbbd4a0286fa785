#include "hg4/classifier.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hg4 {
namespace {

const OrbitTable &table() {
    static const OrbitTable t = enumerate_orbits();
    return t;
}

const Classification &classification() {
    static const Classification c = classify_all(table());
    return c;
}

const ClassRecord &record_for_row(int row) {
    for (const ClassRecord &r : classification().hypergraph_classes) {
        if (r.reference_row == row) {
            return r;
        }
    }
    throw std::logic_error("row not matched");
}

double h2(double p) {
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

TEST(ReferenceRows, Shape) {
    const auto &rows = reference_rows();
    ASSERT_EQ(rows.size(), 28u);
    int m3 = 0;
    for (const ReferenceRow &r : rows) {
        EXPECT_EQ(r.rank, r.row <= 11 ? 4 : 3);
        EXPECT_EQ(r.table, r.row <= 11 ? "I" : "III");
        if (r.rank == 3) {
            m3 += r.m;
        }
    }
    EXPECT_EQ(m3, 120);
    EXPECT_THROW(reference_row(0), std::out_of_range);
    EXPECT_THROW(reference_row(29), std::out_of_range);
}

TEST(ReferenceRows, PrintedClosedFormsAgreeToFourDecimals) {
    int count = 0;
    for (const ReferenceRow &r : reference_rows()) {
        if (r.closed_form) {
            EXPECT_NEAR(r.ge, *r.closed_form, kTableTolerance) << r.row;
            count++;
        }
    }
    EXPECT_EQ(count, 16);
}

TEST(ReferenceRows, SignaturesAreDistinct) {
    const auto &rows = reference_rows();
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (rows[i].rank != rows[j].rank) {
                continue;
            }
            const ClassSignature a = make_signature(rows[i].ge, {rows[i].be1, rows[i].be2});
            const ClassSignature b = make_signature(rows[j].ge, {rows[j].be1, rows[j].be2});
            EXPECT_FALSE(signatures_collide(a, b)) << rows[i].row << " vs " << rows[j].row;
        }
    }
}

TEST(TableConstants, RankThreeConstantsHaveClosedForms) {
    EXPECT_NEAR(table_constants::r, h2(0.25), 5e-5);
    EXPECT_NEAR(table_constants::s, 1.5, 1e-12);
}

TEST(TableConstants, RecoveredFromComputedEntropies) {
    using namespace table_constants;
    const std::vector<double> rank4{a, b, c, d, e};
    const std::vector<double> rank3{r, s, t, u, 0.0, 1.0};
    auto nearest = [](const std::vector<double> &set, double v) {
        double best = 1e9;
        for (double x : set) {
            best = std::min(best, std::abs(x - v));
        }
        return best;
    };
    std::set<int> used4;
    std::set<int> used3;
    for (const ClassRecord &rec : classification().hypergraph_classes) {
        const auto &set = rec.orbit.rank == 4 ? rank4 : rank3;
        auto &used = rec.orbit.rank == 4 ? used4 : used3;
        std::vector<double> values(rec.profile.be1.begin(), rec.profile.be1.end());
        values.insert(values.end(), rec.profile.be2.begin(), rec.profile.be2.end());
        for (double v : values) {
            EXPECT_LT(nearest(set, v), 5e-5) << rec.label << " " << v;
            for (size_t k = 0; k < set.size(); k++) {
                if (std::abs(set[k] - v) < 5e-5) {
                    used.insert(static_cast<int>(k));
                }
            }
        }
    }
    EXPECT_EQ(used4.size(), 5u);
    EXPECT_EQ(used3.size(), 6u);
}

TEST(Classification, MatchesEveryRowOnce) {
    const Classification &c = classification();
    EXPECT_TRUE(c.fully_matched());
    EXPECT_TRUE(c.match_failures.empty());
    EXPECT_TRUE(c.collisions.empty());
    ASSERT_EQ(c.hypergraph_classes.size(), 28u);
    EXPECT_EQ(c.graph_classes.size(), 11u);
    for (size_t k = 0; k < c.hypergraph_classes.size(); k++) {
        const ClassRecord &r = c.hypergraph_classes[k];
        ASSERT_TRUE(r.reference_row.has_value());
        EXPECT_EQ(*r.reference_row, static_cast<int>(k) + 1);
        EXPECT_EQ(r.label, "No." + std::to_string(k + 1));
        const ReferenceRow &row = reference_row(*r.reference_row);
        EXPECT_NEAR(r.signature.ge, row.ge, kTableTolerance) << r.label;
        EXPECT_EQ(r.orbit.rank, row.rank);
    }
    for (size_t k = 0; k < c.graph_classes.size(); k++) {
        EXPECT_EQ(c.graph_classes[k].label, "G" + std::to_string(k + 1));
        EXPECT_LE(c.graph_classes[k].orbit.rank, 2);
        EXPECT_FALSE(c.graph_classes[k].reference_row.has_value());
    }
}

TEST(Classification, MultiplicityDisagreesOnlyOnSwappedRows) {
    std::set<int> disagree;
    for (const ClassRecord &r : classification().hypergraph_classes) {
        if (!r.m_agrees()) {
            disagree.insert(*r.reference_row);
        }
    }
    EXPECT_EQ(disagree, (std::set<int>{23, 25}));
    EXPECT_EQ(*record_for_row(23).orbit.m, reference_row(25).m);
    EXPECT_EQ(*record_for_row(25).orbit.m, reference_row(23).m);
}

TEST(Classification, ClosedFormsWithinOneMillionth) {
    for (const ClassRecord &r : classification().hypergraph_classes) {
        if (r.closed_form) {
            EXPECT_NEAR(r.signature.ge, *r.closed_form, 1e-6) << r.label;
        }
    }
}

TEST(Classification, GeEqualClassesSeparatedByEntropies) {
    const std::vector<std::vector<int>> groups{{5, 15}, {19, 25}, {20, 21}, {14, 18, 22}};
    for (const auto &group : groups) {
        for (size_t i = 0; i < group.size(); i++) {
            for (size_t j = i + 1; j < group.size(); j++) {
                const ClassSignature &x = record_for_row(group[i]).signature;
                const ClassSignature &y = record_for_row(group[j]).signature;
                EXPECT_NEAR(x.ge, y.ge, kTableTolerance);
                EXPECT_FALSE(signatures_collide(x, y)) << group[i] << " vs " << group[j];
            }
        }
    }
}

TEST(Classification, WorkedExampleIsRowOne) {
    const ClassRecord &r = record_for_row(1);
    EXPECT_EQ(format_edges(r.display), "1234");
    EXPECT_EQ(r.orbit.size, 256u);
}

TEST(Classification, PatternDependsOnRepresentativeForSomeRows) {
    const ClassRecord &r = record_for_row(21);
    std::set<std::string> labels;
    for (const auto &[code, pattern] : representative_patterns(table(), r.orbit.orbit_id, {})) {
        EXPECT_FALSE(code.has_loops());
        labels.insert(pattern.label);
    }
    EXPECT_TRUE(labels.contains("1,2,1"));
    EXPECT_TRUE(labels.contains("2,2"));
}

TEST(Reports, Deterministic) {
    const Classification again = classify_all(table());
    for (ReportFormat f : {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kMarkdown}) {
        EXPECT_EQ(emit_report(classification(), f), emit_report(again, f));
    }
}

TEST(Reports, JsonSchema) {
    const auto doc = nlohmann::json::parse(emit_report(classification(), ReportFormat::kJson));
    ASSERT_EQ(doc.at("classes").size(), 39u);
    EXPECT_EQ(doc.at("seed"), 0);
    EXPECT_EQ(doc.at("totals").at("rank4"), 16384);
    EXPECT_EQ(doc.at("totals").at("rank3"), 15360);
    EXPECT_EQ(doc.at("totals").at("graphs"), 1024);
    for (const char *key : {"paper_table", "paper_row", "rep_edges", "rank", "m", "orbit_size", "ge",
                            "ge_closed_form", "be2", "be1", "pattern", "reality", "restarts_hit"}) {
        EXPECT_TRUE(doc["classes"][0].contains(key)) << key;
    }
    const auto &first = doc["classes"][0];
    EXPECT_EQ(first["paper_table"], "I");
    EXPECT_EQ(first["paper_row"], 1);
    EXPECT_EQ(first["rep_edges"], "1234");
    EXPECT_EQ(first["be2"].size(), 3u);
    EXPECT_EQ(first["be1"].size(), 4u);
    EXPECT_TRUE(first["ge_closed_form"].is_null());
    EXPECT_TRUE(doc["classes"][11]["ge_closed_form"].is_number());
    const auto &graph = doc["classes"][28];
    EXPECT_TRUE(graph["paper_row"].is_null());
    EXPECT_TRUE(graph["m"].is_null());
}

TEST(Reports, CsvAndMarkdownShape) {
    const std::string csv = emit_report(classification(), ReportFormat::kCsv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 40);
    const std::string md = emit_report(classification(), ReportFormat::kMarkdown);
    EXPECT_NE(md.find("| No.28 |"), std::string::npos);
    EXPECT_NE(md.find("| G11 |"), std::string::npos);
    EXPECT_NE(md.find("Seed 0"), std::string::npos);
}

TEST(Reports, FormatNames) {
    EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
    EXPECT_EQ(parse_report_format("md"), ReportFormat::kMarkdown);
    EXPECT_EQ(parse_report_format("markdown"), ReportFormat::kMarkdown);
    EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Reports, UnwritablePath) {
    EXPECT_THROW(write_report("/nonexistent-dir/report.json", "{}"), std::runtime_error);
}

}  // namespace
}  // namespace hg4
