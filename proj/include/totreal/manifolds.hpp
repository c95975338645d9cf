#ifndef TOTREAL_MANIFOLDS_HPP
#define TOTREAL_MANIFOLDS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "totreal/abelian.hpp"
#include "totreal/tristate.hpp"

namespace totreal {

enum class AtomKind {
    Sphere,         // S^n, n >= 1
    Torus,          // T^n, n >= 1
    Wu,             // SU(3)/SO(3)
    M,              // M(p,k): H2 = Z/p^k + Z/p^k, spin
    X,              // X(k): H2 = Z/2^k + Z/2^k, non-spin
    TwistedS3S2,    // nontrivial S^3-bundle over S^2
    Cp2ConnSumCp2Bar  // CP^2 # conj(CP^2), dim 4 circle-bundle base
};

struct BlockAtom {
    AtomKind kind;
    int a = 0;  // Sphere/Torus: n; M: p; X: k
    int b = 0;  // M: k

    bool operator==(const BlockAtom&) const = default;
};

/// Per-degree integral homology, degrees 0..dim; nullopt = unknown.
struct HomologyProfile {
    std::vector<std::optional<FGAbelianGroup>> groups;

    bool fully_known() const;
    bool fully_free() const;  // known and torsion-free in every degree
    bool operator==(const HomologyProfile&) const = default;
};

struct InvariantRecord {
    int dim = 0;
    TriState orientable = TriState::Unknown;
    TriState simply_connected = TriState::Unknown;
    HomologyProfile homology;
    std::optional<long long> euler;
    std::optional<int> semi_char;  // defined only when dim is odd
    TriState w2_zero = TriState::Unknown;
    TriState p1_zero = TriState::Unknown;
    TriState stably_parallelizable = TriState::Unknown;
    TriState ctm_trivial = TriState::Unknown;
    std::optional<GroupPresentation> pi1;  // tracked through group realizations

    bool operator==(const InvariantRecord&) const = default;
};

enum class NodeKind { Atom, ConnectedSum, Product, Surgery, TorusBundleTotal };

class Manifold;
using ManifoldPtr = std::shared_ptr<const Manifold>;

/// Immutable expression tree over catalog atoms and closure constructions.
/// The invariant record is computed once at construction; all queries are
/// pure reads, so descriptors can be shared freely across threads.
class Manifold {
  public:
    NodeKind node() const { return node_; }
    const BlockAtom& atom() const { return atom_; }
    const ManifoldPtr& left() const { return left_; }
    const ManifoldPtr& right() const { return right_; }
    bool reverse_second() const { return reverse_second_; }
    int surgery_p() const { return surgery_p_; }
    bool canonical_framing() const { return canonical_framing_; }
    const std::string& sphere_spec() const { return sphere_spec_; }
    int torus_rank() const { return torus_rank_; }

    const InvariantRecord& record() const { return record_; }
    int dim() const { return record_.dim; }

    bool structurally_equal(const Manifold& other) const;

    // Factories. Parameter and structure validation throws ValidationError
    // subclasses; the cached record is filled by the propagation rules.
    static ManifoldPtr make_atom(BlockAtom atom);
    static ManifoldPtr make_connected_sum(ManifoldPtr left, ManifoldPtr right, bool reverse_second);
    static ManifoldPtr make_product(ManifoldPtr left, ManifoldPtr right);
    static ManifoldPtr make_surgery(ManifoldPtr base, int p, bool canonical_framing,
                                    std::string sphere_spec);
    static ManifoldPtr make_torus_bundle_total(ManifoldPtr base, int k);

  private:
    Manifold() = default;

    NodeKind node_ = NodeKind::Atom;
    BlockAtom atom_{};
    ManifoldPtr left_, right_;
    bool reverse_second_ = false;
    int surgery_p_ = 0;
    bool canonical_framing_ = false;
    std::string sphere_spec_;
    int torus_rank_ = 0;
    InvariantRecord record_;
};

/// Convenience atom constructors (parameter checks included).
ManifoldPtr sphere(int n);
ManifoldPtr torus(int n);
ManifoldPtr wu_manifold();
ManifoldPtr m_block(int p, int k);
ManifoldPtr x_block(int k);
ManifoldPtr twisted_s3s2();
ManifoldPtr cp2_connsum_cp2bar();

const HomologyProfile& homology(const ManifoldPtr& d);
std::optional<long long> euler_characteristic(const ManifoldPtr& d);

/// Kervaire semi-characteristic: parity of sum of mod-2 cohomology dims in
/// degrees 0..k for dim = 2k+1, computed from the integral profile via
/// universal coefficients. Throws DomainError in even dimension.
std::optional<int> semi_characteristic(const ManifoldPtr& d);

const InvariantRecord& invariants(const ManifoldPtr& d);

/// Semi-characteristic of a standalone profile (dim odd). Used by the
/// record propagation and exposed for the selfcheck command.
std::optional<int> semi_characteristic_of_profile(const HomologyProfile& profile, int dim);

/// Display flag per Kervaire: stably parallelizable odd-dim manifolds outside
/// dims {1,3,7} are parallelizable iff the semi-characteristic vanishes.
/// Feeds no decision rule.
TriState parallelizable_flag(const InvariantRecord& r);

/// True when M(p,k) was built with a composite p: the block is accepted but
/// reported as outside the standard prime-power table.
bool outside_table_parameters(const ManifoldPtr& d);

std::string atom_name(const BlockAtom& atom);

}  // namespace totreal

#endif
