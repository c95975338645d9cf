#ifndef TOTREAL_REPORT_HPP
#define TOTREAL_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "totreal/constructions.hpp"
#include "totreal/decisions.hpp"
#include "totreal/manifolds.hpp"

namespace totreal {

/// Assembled answer for one query: input echo, invariants, verdicts with
/// traces, optional certificate, warnings. The JSON form follows
/// docs/report.schema.json and round-trips losslessly.
struct Report {
    std::string input;
    ManifoldPtr descriptor;
    Decision decision;
    const RealizationCertificate* certificate = nullptr;  // optional, not owned
    std::vector<std::string> warnings;
};

Report make_invariants_report(const std::string& input, const ManifoldPtr& d);
Report make_decide_report(const std::string& input, const ManifoldPtr& d);

nlohmann::json report_to_json(const Report& r, bool include_traces);
std::string report_to_text(const Report& r, bool include_traces);

nlohmann::json certificate_to_json(const RealizationCertificate& cert);

struct Table1Row {
    std::string name;
    ManifoldPtr manifold;
    std::string h2_expected;
    bool w2_zero_expected;
    int semi_char_expected;
    bool passed = false;
    std::string detail;
};

/// Recomputes the H2 / w2 / semi-characteristic columns of the six-row
/// building-block table from the stored catalog and compares.
std::vector<Table1Row> table1_selfcheck();

}  // namespace totreal

#endif
