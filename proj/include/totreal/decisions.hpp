#ifndef TOTREAL_DECISIONS_HPP
#define TOTREAL_DECISIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "totreal/manifolds.hpp"

namespace totreal {

struct Citation {
    std::string source;
    std::string quote;
    bool operator==(const Citation&) const = default;
};

struct RuleInfo {
    std::string id;
    std::string hypothesis;
    Citation citation;
};

/// The rule base as auditable data; documentation, traces, and tests all read
/// this one table.
const std::vector<RuleInfo>& rule_catalog();
std::string rule_catalog_json();
const RuleInfo& rule(const std::string& id);

struct RuleApplication {
    std::string rule_id;
    Citation citation;
    std::vector<std::pair<std::string, std::string>> inputs;  // invariant name -> value
};

struct Decision {
    TriState immersion = TriState::Unknown;
    TriState embedding = TriState::Unknown;
    std::vector<RuleApplication> immersion_trace;
    std::vector<RuleApplication> embedding_trace;
};

/// Structure-dependent inputs that are not part of the invariant record.
/// Kept separate so masking experiments can perturb the record alone.
struct StructuralFacts {
    std::optional<int> sphere_atom_dim;  // set when the node is a sphere atom
    bool is_product = false;
    std::optional<std::pair<Decision, Decision>> product_children;
};

/// Fixed-point of rule application over an explicit record. Throws EngineFault
/// if two rules disagree on a verdict slot (must be unreachable).
Decision decide_record(const InvariantRecord& r, const StructuralFacts& facts);

Decision decide(const ManifoldPtr& d);

struct BardenNormalForm {
    // Canonical sorted multiset of 5-dimensional blocks (name, multiplicity);
    // the twisted summand is carried by delta, sphere summands are dropped.
    std::vector<std::pair<std::string, int>> blocks;
    bool delta = false;
    bool residual = false;  // input not a recognized simply connected 5-expression
    TriState embedding = TriState::Unknown;
    std::optional<std::string> prototype;  // spin presentation string when w2 = 0
};

/// Normal form of a connected sum of 5-dimensional catalog blocks. Extra
/// copies of the twisted bundle beyond the first are traded for S2 x S3
/// (same H2, w2 and semi-characteristic). Throws DomainError off dimension 5.
BardenNormalForm barden_normal_form(const ManifoldPtr& d);

/// Generic-immersion verdict for the hypersurface target C^((dim+1)/2).
/// Throws UnsupportedError in even dimensions.
TriState decide_generic(const ManifoldPtr& d);

}  // namespace totreal

#endif
