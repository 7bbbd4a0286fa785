#include "hg4/classifier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hg4 {

namespace {

using namespace table_constants;

struct RowSpec {
    const char *table;
    int row;
    int rank;
    int m;
    double ge;
    std::array<double, 3> be2;
    std::array<double, 4> be1;
    const char *pattern;
    char reality;
};

// clang-format off
constexpr std::array<RowSpec, 28> kRows{{
    {"I", 1, 4, 1, 0.3043, {a, a, a}, {d, d, d, d}, "4", 'R'},
    {"I", 2, 4, 6, 0.8157, {a, b, b}, {e, e, d, d}, "2,2", 'R'},
    {"I", 3, 4, 3, 1.4891, {a, c, c}, {e, e, e, e}, "2,2", 'R'},
    {"I", 4, 4, 12, 0.8954, {b, b, b}, {e, e, d, e}, "1,2,1", 'R'},
    {"I", 5, 4, 12, 1.5261, {b, c, c}, {e, e, e, e}, "1,1,1,1", 'R'},
    {"I", 6, 4, 4, 0.8916, {b, b, b}, {e, e, e, e}, "2,2", 'R'},
    {"I", 7, 4, 4, 1.1360, {b, b, b}, {e, e, d, e}, "2,2", 'C'},
    {"I", 8, 4, 3, 1.1732, {c, b, c}, {e, e, e, e}, "4", 'R'},
    {"I", 9, 4, 12, 1.4316, {b, c, c}, {e, e, e, e}, "1,2,1", 'R'},
    {"I", 10, 4, 6, 1.1165, {c, b, c}, {e, e, e, e}, "2,2", 'R'},
    {"I", 11, 4, 1, 1.1726, {b, b, b}, {e, e, e, e}, "4", 'C'},
    {"III", 12, 3, 4, 0.5647, {r, r, r}, {r, r, r, 0}, "1,3", 'R'},
    {"III", 13, 3, 12, 1.5417, {s, s, s}, {1, r, 1, 1}, "1,2,1", 'R'},
    {"III", 14, 3, 12, 1.0, {s, s, r}, {1, r, r, 1}, "1,3", 'R'},
    {"III", 15, 3, 4, 1.5261, {s, s, s}, {1, 1, 1, 1}, "1,3", 'R'},
    {"III", 16, 3, 6, 0.6115, {r, t, t}, {r, r, r, r}, "2,2", 'R'},
    {"III", 17, 3, 6, 1.2284, {r, u, u}, {1, 1, r, r}, "2,2", 'C'},
    {"III", 18, 3, 12, 1.0, {s, t, t}, {r, r, r, 1}, "1,3", 'R'},
    {"III", 19, 3, 12, 1.4150, {s, u, u}, {1, 1, r, 1}, "1,2,1", 'R'},
    {"III", 20, 3, 6, 1.4569, {s, t, t}, {r, r, 1, 1}, "1,2,1", 'R'},
    {"III", 21, 3, 6, 1.4569, {s, u, u}, {1, 1, 1, 1}, "2,2", 'R'},
    {"III", 22, 3, 4, 1.0, {t, t, t}, {1, r, r, r}, "1,3", 'R'},
    {"III", 23, 3, 12, 0.6781, {t, t, t}, {r, r, r, r}, "1,3", 'R'},
    {"III", 24, 3, 12, 1.3173, {u, u, t}, {1, 1, 1, r}, "1,2,1", 'R'},
    {"III", 25, 3, 4, 1.4150, {u, u, t}, {r, 1, 1, r}, "1,2,1", 'R'},
    {"III", 26, 3, 1, 1.2230, {t, t, t}, {1, 1, 1, 1}, "4", 'R'},
    {"III", 27, 3, 6, 1.2767, {t, u, u}, {r, r, 1, 1}, "2,2", 'R'},
    {"III", 28, 3, 1, 0.8301, {t, t, t}, {r, r, r, r}, "4", 'R'},
}};
// clang-format on

template <size_t N>
std::array<double, N> sorted_descending(std::array<double, N> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

template <size_t N>
bool multisets_close(const std::array<double, N> &x, const std::array<double, N> &y, double tol) {
    const auto sx = sorted_descending(x);
    const auto sy = sorted_descending(y);
    for (size_t k = 0; k < N; k++) {
        if (std::abs(sx[k] - sy[k]) >= tol) {
            return false;
        }
    }
    return true;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    // Avoid "-0.0000".
    if (std::string(buf).find_first_not_of("-0.") == std::string::npos && buf[0] == '-') {
        return std::string(buf + 1);
    }
    return buf;
}

template <size_t N>
std::string joined(const std::array<double, N> &v, int digits, const char *sep) {
    std::string out;
    for (size_t k = 0; k < N; k++) {
        if (k) {
            out += sep;
        }
        out += fixed(v[k], digits);
    }
    return out;
}

std::vector<const ClassRecord *> report_order(const Classification &c) {
    std::vector<const ClassRecord *> out;
    for (const ClassRecord &r : c.hypergraph_classes) {
        out.push_back(&r);
    }
    for (const ClassRecord &r : c.graph_classes) {
        out.push_back(&r);
    }
    return out;
}

std::string table_of(const ClassRecord &r) {
    return r.reference_row ? reference_row(*r.reference_row).table : std::string();
}

std::string emit_json(const Classification &c) {
    nlohmann::ordered_json doc;
    doc["classes"] = nlohmann::ordered_json::array();
    for (const ClassRecord *r : report_order(c)) {
        nlohmann::ordered_json j;
        if (r->reference_row) {
            j["paper_table"] = table_of(*r);
            j["paper_row"] = *r->reference_row;
        } else {
            j["paper_table"] = nullptr;
            j["paper_row"] = nullptr;
        }
        j["label"] = r->label;
        j["rep_edges"] = format_edges(r->display);
        j["rep_code"] = r->orbit.rep.bits;
        j["rank"] = r->orbit.rank;
        if (r->orbit.m) {
            j["m"] = *r->orbit.m;
        } else {
            j["m"] = nullptr;
        }
        if (r->reference_row) {
            j["reference_m"] = reference_row(*r->reference_row).m;
        } else {
            j["reference_m"] = nullptr;
        }
        j["orbit_size"] = r->orbit.size;
        j["ge"] = r->signature.ge;
        if (r->closed_form) {
            j["ge_closed_form"] = *r->closed_form;
            j["closed_form_expression"] = r->closed_form_expression;
        } else {
            j["ge_closed_form"] = nullptr;
            j["closed_form_expression"] = nullptr;
        }
        j["be2"] = r->profile.be2;
        j["be1"] = r->profile.be1;
        j["pattern"] = r->solution.pattern.label;
        j["reality"] = std::string(1, r->solution.pattern.reality());
        j["restarts_hit"] = r->solution.restarts_hit;
        j["converged"] = r->solution.converged;
        doc["classes"].push_back(std::move(j));
    }
    doc["totals"] = {{"rank4", c.census.rank4}, {"rank3", c.census.rank3}, {"graphs", c.census.graphs}};
    doc["seed"] = c.policy.seed;
    return doc.dump(2) + "\n";
}

std::string emit_csv(const Classification &c) {
    std::ostringstream out;
    out << "label,paper_table,paper_row,rep_edges,rank,m,orbit_size,ge,ge_closed_form,closed_form_delta,"
           "be2_12_34,be2_13_24,be2_14_23,be1_1,be1_2,be1_3,be1_4,pattern,reality,restarts_hit\n";
    for (const ClassRecord *r : report_order(c)) {
        out << r->label << ',' << table_of(*r) << ',' << (r->reference_row ? std::to_string(*r->reference_row) : "")
            << ",\"" << format_edges(r->display) << "\"," << r->orbit.rank << ','
            << (r->orbit.m ? std::to_string(*r->orbit.m) : "") << ',' << r->orbit.size << ','
            << fixed(r->signature.ge, 10) << ',' << (r->closed_form ? fixed(*r->closed_form, 10) : "") << ','
            << (r->closed_form ? fixed(r->signature.ge - *r->closed_form, 12) : "") << ','
            << joined(r->profile.be2, 10, ",") << ',' << joined(r->profile.be1, 10, ",") << ",\""
            << r->solution.pattern.label << "\"," << r->solution.pattern.reality() << ',' << r->solution.restarts_hit
            << '\n';
    }
    return out.str();
}

std::string emit_markdown(const Classification &c) {
    std::ostringstream out;
    out << "# Four-qubit hypergraph state classes\n\n";
    out << "Seed " << c.policy.seed << ", " << c.policy.restarts << " restarts + " << c.policy.probe_count()
        << " real probes, tol " << c.policy.tol << ", max_iter " << c.policy.max_iter << ".\n\n";
    out << "Codes: rank 4 = " << c.census.rank4 << ", rank 3 = " << c.census.rank3 << ", graphs = " << c.census.graphs
        << ".\n\n";
    auto table = [&](const std::vector<ClassRecord> &records) {
        out << "| No. | m | GE | BE2 | BE1 | D | R/C | Representative | Orbit size | Closed-form delta | Hits |\n";
        out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
        for (const ClassRecord &r : records) {
            out << "| " << r.label << " | " << (r.orbit.m ? std::to_string(*r.orbit.m) : "-");
            if (r.reference_row && !r.m_agrees()) {
                out << " (printed " << reference_row(*r.reference_row).m << ")";
            }
            out << " | " << fixed(r.signature.ge, 4) << " | " << joined(r.profile.be2, 4, ", ") << " | "
                << joined(r.profile.be1, 4, ", ") << " | " << r.solution.pattern.label << " | "
                << r.solution.pattern.reality() << " | {" << format_edges(r.display) << "} | " << r.orbit.size << " | "
                << (r.closed_form ? fixed(r.signature.ge - *r.closed_form, 9) : "-") << " | "
                << r.solution.restarts_hit << "/" << r.solution.runs << " |\n";
        }
        out << "\n";
    };
    std::vector<ClassRecord> rank4;
    std::vector<ClassRecord> rank3;
    for (const ClassRecord &r : c.hypergraph_classes) {
        (r.orbit.rank == 4 ? rank4 : rank3).push_back(r);
    }
    out << "## Rank 4\n\n";
    table(rank4);
    out << "## Rank 3\n\n";
    table(rank3);
    out << "## Graph states (rank <= 2)\n\n";
    table(c.graph_classes);
    return out.str();
}

}  // namespace

const std::vector<ReferenceRow> &reference_rows() {
    static const std::vector<ReferenceRow> rows = [] {
        std::map<int, const ClosedForm *> forms;
        for (const ClosedForm &f : closed_form_reference()) {
            forms[f.row] = &f;
        }
        std::vector<ReferenceRow> out;
        for (const RowSpec &entry : kRows) {
            ReferenceRow r;
            r.table = entry.table;
            r.row = entry.row;
            r.rank = entry.rank;
            r.m = entry.m;
            r.ge = entry.ge;
            r.be2 = entry.be2;
            r.be1 = entry.be1;
            r.pattern = entry.pattern;
            r.reality = entry.reality;
            if (auto it = forms.find(entry.row); it != forms.end()) {
                r.closed_form = it->second->value;
                r.closed_form_expression = it->second->expression;
            }
            out.push_back(std::move(r));
        }
        return out;
    }();
    return rows;
}

const ReferenceRow &reference_row(int row) {
    if (row < 1 || row > static_cast<int>(reference_rows().size())) {
        throw std::out_of_range("reference rows are numbered 1..28");
    }
    return reference_rows()[row - 1];
}

ClassSignature make_signature(double ge, const EntropyProfile &profile) {
    return ClassSignature{ge, sorted_descending(profile.be2), sorted_descending(profile.be1)};
}

ClassSignature signature(HypergraphCode h, const SolverPolicy &policy) {
    return make_signature(geometric_entanglement(h, policy).eg, entropy_profile(h));
}

bool signatures_collide(const ClassSignature &x, const ClassSignature &y, double tol) {
    return std::abs(x.ge - y.ge) < tol && multisets_close(x.be2, y.be2, tol) && multisets_close(x.be1, y.be1, tol);
}

bool ClassRecord::m_agrees() const {
    if (!reference_row) {
        return true;
    }
    return orbit.m && *orbit.m == hg4::reference_row(*reference_row).m;
}

MatchResult match_to_reference(const ClassRecord &record) {
    MatchResult result;
    for (const ReferenceRow &row : reference_rows()) {
        if (row.rank != record.orbit.rank) {
            continue;
        }
        if (std::abs(row.ge - record.signature.ge) >= kTableTolerance) {
            continue;
        }
        if (!multisets_close(row.be2, record.signature.be2, kTableTolerance) ||
            !multisets_close(row.be1, record.signature.be1, kTableTolerance)) {
            continue;
        }
        result.candidates.push_back(row.row);
    }
    if (result.candidates.size() == 1) {
        result.status = MatchResult::Status::kMatched;
        result.row = result.candidates.front();
    } else if (result.candidates.size() > 1) {
        result.status = MatchResult::Status::kAmbiguous;
    }
    return result;
}

ClassRecord make_class_record(const OrbitTable &table, int orbit_id, const SolverPolicy &policy) {
    ClassRecord r;
    r.orbit = orbit_of(table, table.reps.at(orbit_id));
    r.display = standardize(r.orbit.rep);
    r.profile = entropy_profile(r.orbit.rep);
    r.solution = geometric_entanglement(r.orbit.rep, policy);
    r.signature = make_signature(r.solution.eg, r.profile);
    return r;
}

Classification classify_all(const OrbitTable &table, const SolverPolicy &policy) {
    policy.validate();
    Classification c;
    c.policy = policy;
    c.census = rank_census(table);

    std::vector<ClassRecord> unmatched;
    std::set<int> assigned;
    for (size_t id = 0; id < table.num_orbits(); id++) {
        ClassRecord r = make_class_record(table, static_cast<int>(id), policy);
        if (r.orbit.rank < 3) {
            r.label = "G" + std::to_string(c.graph_classes.size() + 1);
            c.graph_classes.push_back(std::move(r));
            continue;
        }
        const MatchResult m = match_to_reference(r);
        if (m.status == MatchResult::Status::kMatched && !assigned.contains(*m.row)) {
            assigned.insert(*m.row);
            r.reference_row = m.row;
            r.label = "No." + std::to_string(*m.row);
            const ReferenceRow &row = reference_row(*m.row);
            r.closed_form = row.closed_form;
            r.closed_form_expression = row.closed_form_expression;
            c.hypergraph_classes.push_back(std::move(r));
            continue;
        }
        std::string what = "orbit of code " + std::to_string(r.orbit.rep.bits) + " {" + format_edges(r.display) + "}";
        if (m.status == MatchResult::Status::kUnmatched) {
            what += " matches no reference row";
        } else if (m.status == MatchResult::Status::kAmbiguous) {
            what += " matches several reference rows";
        } else {
            what += " matches row " + std::to_string(*m.row) + ", which is already taken";
        }
        c.match_failures.push_back(what);
        unmatched.push_back(std::move(r));
    }
    std::sort(c.hypergraph_classes.begin(), c.hypergraph_classes.end(),
              [](const ClassRecord &x, const ClassRecord &y) { return *x.reference_row < *y.reference_row; });
    for (ClassRecord &r : unmatched) {
        r.label = "U" + std::to_string(c.hypergraph_classes.size() + 1);
        c.hypergraph_classes.push_back(std::move(r));
    }
    for (size_t i = 0; i < c.hypergraph_classes.size(); i++) {
        for (size_t j = i + 1; j < c.hypergraph_classes.size(); j++) {
            if (signatures_collide(c.hypergraph_classes[i].signature, c.hypergraph_classes[j].signature)) {
                c.collisions.emplace_back(i, j);
            }
        }
    }
    return c;
}

std::vector<std::pair<HypergraphCode, DegeneracyPattern>> representative_patterns(const OrbitTable &table,
                                                                                   int orbit_id,
                                                                                   const SolverPolicy &policy) {
    std::set<uint16_t> seen;
    std::vector<std::pair<HypergraphCode, DegeneracyPattern>> out;
    for (HypergraphCode h : orbit_members(table, orbit_id)) {
        if (h.has_loops()) {
            continue;
        }
        uint16_t canonical = h.bits;
        for (const Permutation &p : Permutation::all()) {
            canonical = std::min(canonical, permute(h, p).bits);
        }
        if (!seen.insert(canonical).second) {
            continue;
        }
        const HypergraphCode rep(canonical);
        out.emplace_back(rep, geometric_entanglement(rep, policy).pattern);
    }
    return out;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") {
        return ReportFormat::kJson;
    }
    if (name == "csv") {
        return ReportFormat::kCsv;
    }
    if (name == "md" || name == "markdown") {
        return ReportFormat::kMarkdown;
    }
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (json, csv, md)");
}

std::string emit_report(const Classification &c, ReportFormat format) {
    switch (format) {
        case ReportFormat::kJson:
            return emit_json(c);
        case ReportFormat::kCsv:
            return emit_csv(c);
        case ReportFormat::kMarkdown:
            return emit_markdown(c);
    }
    throw std::invalid_argument("unknown report format");
}

void write_report(const std::filesystem::path &path, const std::string &document) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open report for writing: " + path.string());
    }
    out << document;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing report: " + path.string());
    }
}

}  // namespace hg4
