#ifndef HG4_CLASSIFIER_H
#define HG4_CLASSIFIER_H

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hg4/geoment.h"
#include "hg4/orbits.h"
#include "hg4/statevec.h"

namespace hg4 {

/// Tolerance for comparisons against values printed to four decimals.
constexpr double kTableTolerance = 5e-4;

/// Entropy constants of the published tables (bits). Rank 4 uses a-e, rank 3 uses r-u plus
/// the exact values 0 and 1.
namespace table_constants {
constexpr double a = 0.6561;
constexpr double b = 1.2624;
constexpr double c = 1.6773;
constexpr double d = 0.5436;
constexpr double e = 0.9544;
constexpr double r = 0.8113;
constexpr double s = 1.5;
constexpr double t = 1.2238;
constexpr double u = 1.6009;
}  // namespace table_constants

/// One row of the published rank-4 ("I") or rank-3 ("III") classification table, merged with
/// the matching property row (pattern and reality).
struct ReferenceRow {
    std::string table;
    int row = 0;
    int rank = 0;
    int m = 0;
    double ge = 0;
    /// Positional, as printed.
    std::array<double, 3> be2{};
    std::array<double, 4> be1{};
    std::string pattern;
    char reality = 'R';
    std::optional<double> closed_form;
    std::string closed_form_expression;
};

/// The 28 reference rows: 1-11 rank 4, then 12-28 rank 3.
const std::vector<ReferenceRow> &reference_rows();
const ReferenceRow &reference_row(int row);

/// GE plus the entropy multisets, each sorted descending.
struct ClassSignature {
    double ge = 0;
    std::array<double, 3> be2{};
    std::array<double, 4> be1{};
};

ClassSignature make_signature(double ge, const EntropyProfile &profile);
/// Computes the signature of `h` itself; callers pass the orbit representative.
ClassSignature signature(HypergraphCode h, const SolverPolicy &policy = {});

/// Every component (GE and each sorted entropy) within `tol`.
bool signatures_collide(const ClassSignature &x, const ClassSignature &y, double tol = kTableTolerance);

struct ClassRecord {
    OrbitRecord orbit;
    /// standardize(orbit.rep), the form used for display.
    HypergraphCode display;
    EntropyProfile profile;
    ClassSignature signature;
    GeSolution solution;
    /// "No.<row>" for matched rank>=3 classes, "G<k>" for graph classes, "U<k>" otherwise.
    std::string label;
    std::optional<int> reference_row;
    std::optional<double> closed_form;
    std::string closed_form_expression;

    /// True when the orbit multiplicity equals the printed m of the matched row.
    bool m_agrees() const;
};

struct MatchResult {
    enum class Status { kMatched, kUnmatched, kAmbiguous };
    Status status = Status::kUnmatched;
    std::optional<int> row;
    std::vector<int> candidates;
};

/// Matches on (rank, GE, BE2 multiset, BE1 multiset), each within 5e-4. The multiplicity m is
/// deliberately not part of the key; see ClassRecord::m_agrees.
MatchResult match_to_reference(const ClassRecord &record);

struct Classification {
    /// Rank-3 and rank-4 orbits, ordered by matched row (unmatched last, by code).
    std::vector<ClassRecord> hypergraph_classes;
    /// Rank <= 2 orbits, ordered by canonical code.
    std::vector<ClassRecord> graph_classes;
    RankCensus census;
    SolverPolicy policy;
    /// Index pairs into hypergraph_classes whose signatures collide.
    std::vector<std::pair<size_t, size_t>> collisions;
    /// Unmatched, ambiguous or doubly assigned rows.
    std::vector<std::string> match_failures;

    bool fully_matched() const {
        return collisions.empty() && match_failures.empty() && hypergraph_classes.size() == reference_rows().size();
    }
};

ClassRecord make_class_record(const OrbitTable &table, int orbit_id, const SolverPolicy &policy);

Classification classify_all(const OrbitTable &table, const SolverPolicy &policy = {});

/// Witness patterns over the loop-free members of an orbit, one per permutation class of
/// members, ordered by code. Used to show how the pattern depends on the representative.
std::vector<std::pair<HypergraphCode, DegeneracyPattern>> representative_patterns(const OrbitTable &table,
                                                                                   int orbit_id,
                                                                                   const SolverPolicy &policy);

enum class ReportFormat { kJson, kCsv, kMarkdown };

/// Accepts "json", "csv", "md" and "markdown". Throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Deterministic for a fixed classification.
std::string emit_report(const Classification &c, ReportFormat format);

/// Throws std::runtime_error naming the path when the file cannot be written.
void write_report(const std::filesystem::path &path, const std::string &document);

}  // namespace hg4

#endif
