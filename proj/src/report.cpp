#include "totreal/report.hpp"

#include <sstream>

#include "totreal/constructions.hpp"

namespace totreal {

namespace {

nlohmann::json tri_json(TriState t) { return to_string(t); }

nlohmann::json homology_json(const HomologyProfile& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : h.groups) arr.push_back(g ? nlohmann::json(g->to_string()) : "unknown");
    return arr;
}

nlohmann::json trace_json(const std::vector<RuleApplication>& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RuleApplication& a : trace) {
        nlohmann::json inputs = nlohmann::json::object();
        for (const auto& [k, v] : a.inputs) inputs[k] = v;
        arr.push_back({{"rule_id", a.rule_id},
                       {"citation", a.citation.source},
                       {"quote", a.citation.quote},
                       {"inputs", inputs}});
    }
    return arr;
}

bool contains_composite_m_block(const ManifoldPtr& d) {
    if (!d) return false;
    if (outside_table_parameters(d)) return true;
    return contains_composite_m_block(d->left()) || contains_composite_m_block(d->right());
}

std::vector<std::string> gather_warnings(const ManifoldPtr& d) {
    std::vector<std::string> out;
    if (contains_composite_m_block(d))
        out.push_back("m(p,k) with composite p: outside the prime-power building-block table");
    return out;
}

}  // namespace

Report make_invariants_report(const std::string& input, const ManifoldPtr& d) {
    Report r;
    r.input = input;
    r.descriptor = d;
    r.warnings = gather_warnings(d);
    return r;
}

Report make_decide_report(const std::string& input, const ManifoldPtr& d) {
    Report r = make_invariants_report(input, d);
    r.decision = decide(d);
    return r;
}

nlohmann::json certificate_to_json(const RealizationCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const ConstructionStep& s : cert.steps)
        steps.push_back(
            {{"operation", s.operation}, {"arguments", s.arguments}, {"citation", s.citation}});
    nlohmann::json j = {{"presentation", cert.presentation.to_string()},
                        {"dim", cert.dim},
                        {"steps", steps},
                        {"product_certificate", cert.product_certificate}};
    if (cert.branch_note) j["branch_note"] = *cert.branch_note;
    if (cert.chosen_branch) j["chosen_branch"] = *cert.chosen_branch;
    return j;
}

nlohmann::json report_to_json(const Report& r, bool include_traces) {
    const InvariantRecord& rec = r.descriptor->record();
    nlohmann::json inv = {{"orientable", tri_json(rec.orientable)},
                          {"simply_connected", tri_json(rec.simply_connected)},
                          {"homology", homology_json(rec.homology)},
                          {"euler", rec.euler ? nlohmann::json(*rec.euler) : "unknown"},
                          {"w2_zero", tri_json(rec.w2_zero)},
                          {"p1_zero", tri_json(rec.p1_zero)},
                          {"stably_parallelizable", tri_json(rec.stably_parallelizable)},
                          {"ctm_trivial", tri_json(rec.ctm_trivial)}};
    if (rec.dim % 2 != 0) {
        inv["semi_char"] = rec.semi_char ? nlohmann::json(*rec.semi_char) : "unknown";
        inv["parallelizable"] = tri_json(parallelizable_flag(rec));
    }
    if (rec.pi1) inv["pi1_presentation"] = rec.pi1->to_string();

    nlohmann::json j = {{"input", r.input},
                        {"dimension", rec.dim},
                        {"invariants", inv},
                        {"warnings", r.warnings}};
    nlohmann::json dec = {{"immersion", tri_json(r.decision.immersion)},
                          {"embedding", tri_json(r.decision.embedding)}};
    if (include_traces)
        dec["traces"] = {{"immersion", trace_json(r.decision.immersion_trace)},
                         {"embedding", trace_json(r.decision.embedding_trace)}};
    j["decision"] = dec;
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    return j;
}

std::string report_to_text(const Report& r, bool include_traces) {
    const InvariantRecord& rec = r.descriptor->record();
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "dimension: " << rec.dim << "\n";
    os << "orientable: " << to_string(rec.orientable)
       << "   simply connected: " << to_string(rec.simply_connected) << "\n";
    os << "homology: [";
    for (std::size_t i = 0; i < rec.homology.groups.size(); ++i)
        os << (i ? ", " : "")
           << (rec.homology.groups[i] ? rec.homology.groups[i]->to_string() : "unknown");
    os << "]\n";
    os << "euler: " << (rec.euler ? std::to_string(*rec.euler) : "unknown") << "\n";
    if (rec.dim % 2 != 0) {
        os << "semi-characteristic: "
           << (rec.semi_char ? std::to_string(*rec.semi_char) : "unknown") << "\n";
        os << "parallelizable: " << to_string(parallelizable_flag(rec)) << "\n";
    }
    os << "w2 = 0: " << to_string(rec.w2_zero) << "   p1 = 0: " << to_string(rec.p1_zero) << "\n";
    os << "stably parallelizable: " << to_string(rec.stably_parallelizable)
       << "   complexified tangent bundle trivial: " << to_string(rec.ctm_trivial) << "\n";
    os << "immersion: " << to_string(r.decision.immersion)
       << "   embedding: " << to_string(r.decision.embedding) << "\n";
    if (include_traces) {
        auto dump = [&os](const char* slot, const std::vector<RuleApplication>& t) {
            for (const RuleApplication& a : t) {
                os << "  [" << slot << "] " << a.rule_id << " (" << a.citation.source
                   << "): \"" << a.citation.quote << "\"";
                if (!a.inputs.empty()) {
                    os << " using";
                    for (const auto& [k, v] : a.inputs) os << " " << k << "=" << v;
                }
                os << "\n";
            }
        };
        dump("immersion", r.decision.immersion_trace);
        dump("embedding", r.decision.embedding_trace);
    }
    if (r.certificate) {
        os << "certificate (" << r.certificate->steps.size() << " steps):\n";
        for (const ConstructionStep& s : r.certificate->steps) {
            os << "  " << s.operation;
            for (const std::string& a : s.arguments) os << " " << a;
            os << "  -- " << s.citation << "\n";
        }
        if (r.certificate->branch_note) os << "  note: " << *r.certificate->branch_note << "\n";
    }
    for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::vector<Table1Row> table1_selfcheck() {
    std::vector<Table1Row> rows = {
        {"S5", sphere(5), "0", true, 1},
        {"S2 x S3", product(sphere(2), sphere(3)), "Z", true, 0},
        {"M_{p^k} (p^k = 9)", m_block(3, 2), "Z/9 + Z/9", true, 1},
        {"SU(3)/SO(3)", wu_manifold(), "Z/2", false, 0},
        {"S3 ~x S2", twisted_s3s2(), "Z", false, 0},
        {"X_k (k = 2)", x_block(2), "Z/4 + Z/4", false, 1},
    };
    for (Table1Row& row : rows) {
        const InvariantRecord& rec = row.manifold->record();
        std::ostringstream detail;
        bool ok = true;
        std::string h2 = rec.homology.groups[2] ? rec.homology.groups[2]->to_string() : "unknown";
        if (h2 != row.h2_expected) {
            ok = false;
            detail << "H2 = " << h2 << ", expected " << row.h2_expected << "; ";
        }
        TriState w2 = tri_of(row.w2_zero_expected);
        if (rec.w2_zero != w2) {
            ok = false;
            detail << "w2_zero = " << to_string(rec.w2_zero) << ", expected " << to_string(w2)
                   << "; ";
        }
        auto sc = semi_characteristic_of_profile(rec.homology, 5);
        if (!sc || *sc != row.semi_char_expected) {
            ok = false;
            detail << "semi-characteristic = " << (sc ? std::to_string(*sc) : "unknown")
                   << ", expected " << row.semi_char_expected << "; ";
        }
        row.passed = ok;
        row.detail = detail.str();
    }
    return rows;
}

}  // namespace totreal
