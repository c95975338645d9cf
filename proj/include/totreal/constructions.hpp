#ifndef TOTREAL_CONSTRUCTIONS_HPP
#define TOTREAL_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "totreal/manifolds.hpp"

namespace totreal {

/// One construction application inside a certificate, with its citation.
struct ConstructionStep {
    std::string operation;   // "atom", "connected_sum", "surgery", "product", ...
    std::vector<std::string> arguments;
    std::string citation;

    bool operator==(const ConstructionStep&) const = default;
};

/// Replayable witness for a group realization / normalization. Replaying the
/// steps from atoms reproduces the descriptor.
struct RealizationCertificate {
    GroupPresentation presentation;
    int dim = 0;
    std::vector<ConstructionStep> steps;
    std::optional<std::string> branch_note;          // set for the N = 1 mod 4 two-branch case
    std::optional<ManifoldPtr> second_branch;        // base # (S^2 x S^{N-2}) when emitted
    std::optional<int> chosen_branch;                // 0/1 when the semi-characteristic decided
    bool product_certificate = false;                // embedding justified factorwise
};

ManifoldPtr connected_sum(ManifoldPtr a, ManifoldPtr b, bool reverse_second = false);
ManifoldPtr surgery(ManifoldPtr d, int p, bool canonical_framing, std::string sphere_spec = "");
ManifoldPtr product(ManifoldPtr a, ManifoldPtr b);
ManifoldPtr torus_bundle_total(ManifoldPtr base, int k);

/// n-fold connected sum of copies of d, n >= 1.
ManifoldPtr connected_sum_copies(const ManifoldPtr& d, int n);

/// Closed N-manifold with fundamental group given by P: a g-fold connected
/// sum of S^1 x S^{N-1} followed by one p = 1 canonical surgery per relator.
/// Requires N >= 4.
std::pair<ManifoldPtr, RealizationCertificate> realize_group(const GroupPresentation& p, int n);

/// Realization adjusted for the embedding criteria:
///   - even N: connected sums with S^2 x S^{N-2} / S^3 x S^{N-3} until chi = 0;
///   - N = 1 mod 4: the two-branch semi-characteristic certificate;
///   - N = 3 mod 4 (and N = 7, 9, ...): the product certificate M^4(G) x
///     spheres, embedding justified by the immersion x embedding product rule.
/// Requires N >= 5.
std::pair<ManifoldPtr, RealizationCertificate> normalize_for_embedding(const GroupPresentation& p,
                                                                       int n);

/// Rebuilds a descriptor from certificate steps; used to audit certificates.
ManifoldPtr replay_certificate(const RealizationCertificate& cert);

}  // namespace totreal

#endif
