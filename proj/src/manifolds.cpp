#include "totreal/manifolds.hpp"

#include <algorithm>
#include <cctype>

#include "totreal/errors.hpp"

namespace totreal {

namespace {

FGAbelianGroup Z(std::size_t r = 1) { return FGAbelianGroup::free(r); }
FGAbelianGroup Zero() { return FGAbelianGroup(); }
FGAbelianGroup ZmodPk(const Int& p, unsigned k) { return FGAbelianGroup(0, {{p, k}}); }

GroupPresentation trivial_presentation() { return GroupPresentation{}; }

GroupPresentation free_presentation(std::size_t g) {
    GroupPresentation p;
    for (std::size_t i = 0; i < g; ++i) p.generators.push_back(std::string(1, char('a' + i)));
    return p;
}

// pi1 of a product / free product: disjoint generators renamed a, b, c, ...
// Returns nullopt when the combined alphabet would exceed single letters.
std::optional<GroupPresentation> combine_presentations(const GroupPresentation& a,
                                                       const GroupPresentation& b,
                                                       bool cross_commutators) {
    std::size_t total = a.generators.size() + b.generators.size();
    if (total > 26) return std::nullopt;
    GroupPresentation out = free_presentation(total);
    const std::size_t off = a.generators.size();
    out.relators = a.relators;
    for (const Word& w : b.relators) {
        Word shifted = w;
        for (Letter& l : shifted) l.generator += off;
        out.relators.push_back(std::move(shifted));
    }
    if (cross_commutators)
        for (std::size_t i = 0; i < a.generators.size(); ++i)
            for (std::size_t j = 0; j < b.generators.size(); ++j)
                out.relators.push_back(Word{{i, +1}, {off + j, +1}, {i, -1}, {off + j, -1}});
    return out;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - i + 1) / i;
    return r;
}

HomologyProfile sphere_profile(int n) {
    HomologyProfile h;
    h.groups.assign(n + 1, Zero());
    h.groups[0] = Z();
    h.groups[n] = (n == 0) ? Z(2) : Z();
    if (n == 0) h.groups[0] = Z(2);
    return h;
}

// Five-dimensional simply connected block with the given H2.
HomologyProfile sc5_profile(const FGAbelianGroup& h2) {
    HomologyProfile h;
    h.groups.assign(6, Zero());
    h.groups[0] = Z();
    h.groups[2] = h2;
    h.groups[3] = Z(h2.rank());  // Poincare duality: free part mirrors H2
    h.groups[5] = Z();
    return h;
}

std::optional<FGAbelianGroup> tensor_with_one_free(const FGAbelianGroup& g,
                                                   const FGAbelianGroup& h) {
    if (h.is_torsion_free()) {
        std::size_t s = h.rank();
        if (s == 0) return Zero();
        std::vector<PrimePower> torsion;
        for (std::size_t i = 0; i < s; ++i)
            torsion.insert(torsion.end(), g.torsion().begin(), g.torsion().end());
        return FGAbelianGroup(g.rank() * s, std::move(torsion));
    }
    if (g.is_torsion_free()) return tensor_with_one_free(h, g);
    return std::nullopt;  // torsion cross-terms not modeled
}

std::optional<long long> euler_from_profile(const HomologyProfile& h) {
    long long chi = 0;
    int sign = 1;
    for (const auto& g : h.groups) {
        if (!g) return std::nullopt;
        chi += sign * static_cast<long long>(g->rank());
        sign = -sign;
    }
    return chi;
}

// "<m>g" with m a power of two >= 2 selects the X_k homology transition.
std::optional<int> parse_two_power_generator_spec(const std::string& spec) {
    if (spec.size() < 2 || spec.back() != 'g') return std::nullopt;
    std::string digits = spec.substr(0, spec.size() - 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return std::nullopt;
    unsigned long long m = 0;
    for (char c : digits) {
        m = m * 10 + static_cast<unsigned long long>(c - '0');
        if (m > (1ull << 40)) return std::nullopt;
    }
    if (m < 2 || (m & (m - 1)) != 0) return std::nullopt;
    int k = 0;
    while ((1ull << (k + 1)) <= m) ++k;
    return k;
}

// Surgery relator spec: a word over the base presentation's single-letter
// generators, uppercase meaning inverse. Empty string = trivial relator.
std::optional<Word> parse_relator_spec(const std::string& spec, const GroupPresentation& p) {
    Word w;
    for (char c : spec) {
        bool inv = std::isupper(static_cast<unsigned char>(c));
        char lower = inv ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
        std::string name(1, lower);
        bool found = false;
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            if (p.generators[i] == name) {
                w.push_back({i, inv ? -1 : +1});
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    return w;
}

// Fills derivable slots and enforces the record's internal implications.
void normalize_record(InvariantRecord& r) {
    if (r.dim % 2 != 0) r.euler = 0;

    if (r.stably_parallelizable == TriState::Yes) {
        if (r.w2_zero == TriState::No || r.p1_zero == TriState::No)
            throw EngineFault("stably parallelizable manifold with nonzero w2 or p1");
        r.w2_zero = TriState::Yes;
        r.p1_zero = TriState::Yes;
        r.ctm_trivial = TriState::Yes;
    }
    if (r.w2_zero == TriState::No || r.p1_zero == TriState::No)
        r.stably_parallelizable = TriState::No;
    if (r.p1_zero == TriState::No) r.ctm_trivial = TriState::No;
    // Dimension four: ctm-triviality is equivalent to p1 = 0.
    if (r.dim == 4 && r.orientable == TriState::Yes && r.p1_zero == TriState::Yes)
        r.ctm_trivial = TriState::Yes;

    if (static_cast<int>(r.homology.groups.size()) != r.dim + 1)
        r.homology.groups.resize(r.dim + 1);
    if (!r.homology.groups[0]) r.homology.groups[0] = Z();  // connected
    if (r.orientable == TriState::Yes && !r.homology.groups[r.dim])
        r.homology.groups[r.dim] = Z();

    if (r.simply_connected == TriState::Yes) {
        if (!r.pi1) r.pi1 = trivial_presentation();
        if (r.dim >= 1 && !r.homology.groups[1]) r.homology.groups[1] = Zero();
    }
    if (r.pi1) {
        FGAbelianGroup h1 = abelianization(*r.pi1);
        if (r.dim >= 1 && !r.homology.groups[1]) r.homology.groups[1] = h1;
        if (!h1.is_trivial()) r.simply_connected = TriState::No;
        else if (r.pi1->generators.empty()) r.simply_connected = TriState::Yes;
    }
    if (!r.euler) r.euler = euler_from_profile(r.homology);
    if (r.dim % 2 != 0)
        r.semi_char = semi_characteristic_of_profile(r.homology, r.dim);
    else
        r.semi_char.reset();
}

InvariantRecord atom_record(const BlockAtom& a) {
    InvariantRecord r;
    r.orientable = TriState::Yes;
    switch (a.kind) {
        case AtomKind::Sphere: {
            int n = a.a;
            if (n < 1) throw ValidationError("Sphere(n) requires n >= 1");
            r.dim = n;
            r.homology = sphere_profile(n);
            r.simply_connected = tri_of(n >= 2);
            r.stably_parallelizable = TriState::Yes;
            r.pi1 = (n == 1) ? free_presentation(1) : trivial_presentation();
            break;
        }
        case AtomKind::Torus: {
            int n = a.a;
            if (n < 1) throw ValidationError("Torus(n) requires n >= 1");
            if (n > 26) throw ValidationError("Torus(n) supported up to n = 26");
            r.dim = n;
            r.homology.groups.resize(n + 1);
            for (int i = 0; i <= n; ++i) r.homology.groups[i] = Z(binomial(n, i));
            r.simply_connected = TriState::No;
            r.stably_parallelizable = TriState::Yes;
            GroupPresentation p = free_presentation(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    p.relators.push_back(Word{{std::size_t(i), +1},
                                              {std::size_t(j), +1},
                                              {std::size_t(i), -1},
                                              {std::size_t(j), -1}});
            r.pi1 = std::move(p);
            break;
        }
        case AtomKind::Wu:
            r.dim = 5;
            r.homology = sc5_profile(ZmodPk(2, 1));
            r.simply_connected = TriState::Yes;
            r.w2_zero = TriState::No;
            r.p1_zero = TriState::Yes;  // H^4 of a 1-connected 5-manifold is zero
            r.ctm_trivial = TriState::Yes;  // admits a totally real embedding (Audin)
            break;
        case AtomKind::M: {
            if (a.a < 2 || a.b < 1) throw ValidationError("M(p,k) requires p >= 2, k >= 1");
            r.dim = 5;
            FGAbelianGroup h2;
            for (const auto& pp : factor_prime_powers(Int(a.a)))
                h2 = h2.direct_sum(ZmodPk(pp.prime, pp.exponent * static_cast<unsigned>(a.b))
                                       .direct_sum(ZmodPk(pp.prime, pp.exponent * static_cast<unsigned>(a.b))));
            r.homology = sc5_profile(h2);
            r.simply_connected = TriState::Yes;
            r.w2_zero = TriState::Yes;
            // Spin simply connected 5-manifolds are stably parallelizable.
            r.stably_parallelizable = TriState::Yes;
            break;
        }
        case AtomKind::X:
            if (a.a < 1) throw ValidationError("X(k) requires k >= 1");
            r.dim = 5;
            r.homology = sc5_profile(ZmodPk(2, static_cast<unsigned>(a.a))
                                         .direct_sum(ZmodPk(2, static_cast<unsigned>(a.a))));
            r.simply_connected = TriState::Yes;
            r.w2_zero = TriState::No;
            r.p1_zero = TriState::Yes;
            r.ctm_trivial = TriState::Yes;  // built by allowed surgery from s3tws2
            break;
        case AtomKind::TwistedS3S2:
            r.dim = 5;
            r.homology = sc5_profile(Z());
            r.simply_connected = TriState::Yes;
            r.w2_zero = TriState::No;
            r.p1_zero = TriState::Yes;
            r.ctm_trivial = TriState::Yes;  // circle bundle over CP2 # conj(CP2), p1 = 0
            break;
        case AtomKind::Cp2ConnSumCp2Bar:
            r.dim = 4;
            r.homology.groups = {Z(), Zero(), Z(2), Zero(), Z()};
            r.simply_connected = TriState::Yes;
            r.w2_zero = TriState::No;
            r.p1_zero = TriState::Yes;  // signature zero
            r.ctm_trivial = TriState::Yes;
            break;
    }
    normalize_record(r);
    return r;
}

InvariantRecord connected_sum_record(const InvariantRecord& a, const InvariantRecord& b,
                                     bool reverse_second) {
    if (a.dim != b.dim)
        throw StructuralError("connected sum requires equal dimensions (" +
                              std::to_string(a.dim) + " vs " + std::to_string(b.dim) + ")");
    if (reverse_second && (a.orientable != TriState::Yes || b.orientable != TriState::Yes))
        throw ValidationError("orientation reversal requires both summands orientable");
    InvariantRecord r;
    r.dim = a.dim;
    const int n = r.dim;
    r.orientable = tri_and(a.orientable, b.orientable);
    if (n >= 3) r.simply_connected = tri_and(a.simply_connected, b.simply_connected);
    r.homology.groups.resize(n + 1);
    for (int i = 1; i < n; ++i)
        if (a.homology.groups[i] && b.homology.groups[i])
            r.homology.groups[i] = a.homology.groups[i]->direct_sum(*b.homology.groups[i]);
    if (a.euler && b.euler) r.euler = *a.euler + *b.euler - (n % 2 == 0 ? 2 : 0);
    r.w2_zero = tri_and(a.w2_zero, b.w2_zero);
    if (a.stably_parallelizable == TriState::Yes && b.stably_parallelizable == TriState::Yes)
        r.stably_parallelizable = TriState::Yes;
    if (a.p1_zero == TriState::Yes && b.p1_zero == TriState::Yes)
        r.p1_zero = TriState::Yes;
    else if ((a.p1_zero == TriState::No && b.p1_zero == TriState::Yes) ||
             (a.p1_zero == TriState::Yes && b.p1_zero == TriState::No))
        r.p1_zero = TriState::No;
    if (a.ctm_trivial == TriState::Yes && b.ctm_trivial == TriState::Yes &&
        a.orientable == TriState::Yes && b.orientable == TriState::Yes)
        r.ctm_trivial = TriState::Yes;
    if (n >= 3 && a.pi1 && b.pi1) r.pi1 = combine_presentations(*a.pi1, *b.pi1, false);
    normalize_record(r);
    return r;
}

InvariantRecord product_record(const InvariantRecord& a, const InvariantRecord& b) {
    InvariantRecord r;
    r.dim = a.dim + b.dim;
    r.orientable = tri_and(a.orientable, b.orientable);
    r.simply_connected = tri_and(a.simply_connected, b.simply_connected);
    r.homology.groups.resize(r.dim + 1);
    if (a.homology.fully_known() && b.homology.fully_known() &&
        (a.homology.fully_free() || b.homology.fully_free())) {
        bool ok = true;
        for (int k = 0; k <= r.dim && ok; ++k) {
            FGAbelianGroup sum;
            for (int i = std::max(0, k - b.dim); i <= std::min(k, a.dim); ++i) {
                auto t = tensor_with_one_free(*a.homology.groups[i], *b.homology.groups[k - i]);
                if (!t) {
                    ok = false;
                    break;
                }
                sum = sum.direct_sum(*t);
            }
            if (ok) r.homology.groups[k] = sum;
        }
        if (!ok) r.homology.groups.assign(r.dim + 1, std::nullopt);
    }
    if (a.euler && b.euler)
        r.euler = *a.euler * *b.euler;
    else if ((a.euler && *a.euler == 0) || (b.euler && *b.euler == 0))
        r.euler = 0;
    if (a.orientable == TriState::Yes && b.orientable == TriState::Yes)
        r.w2_zero = tri_and(a.w2_zero, b.w2_zero);
    if (a.p1_zero == TriState::Yes && b.p1_zero == TriState::Yes) r.p1_zero = TriState::Yes;
    if (a.stably_parallelizable == TriState::Yes && b.stably_parallelizable == TriState::Yes)
        r.stably_parallelizable = TriState::Yes;
    r.ctm_trivial = (a.ctm_trivial == TriState::Yes && b.ctm_trivial == TriState::Yes)
                        ? TriState::Yes
                        : TriState::Unknown;
    if (a.pi1 && b.pi1) r.pi1 = combine_presentations(*a.pi1, *b.pi1, true);
    normalize_record(r);
    return r;
}

InvariantRecord surgery_record(const Manifold& base, int p, bool canonical,
                               const std::string& spec) {
    if (p < 0 || p > 2)
        throw UnsupportedError(
            "surgery supported only along S^p with 0 <= p <= 2 (closure theorem hypothesis)");
    const InvariantRecord& br = base.record();
    const int n = br.dim;
    if (n < p + 2) throw StructuralError("surgery sphere does not fit: dim <= p + 1");

    // The one homology-carrying transition: surgery on s3tws2 along 2^k times
    // the H2 generator yields the X_k block.
    if (base.node() == NodeKind::Atom && base.atom().kind == AtomKind::TwistedS3S2 && p == 2) {
        if (auto k = parse_two_power_generator_spec(spec)) {
            InvariantRecord r = atom_record({AtomKind::X, *k, 0});
            return r;
        }
    }

    InvariantRecord r;
    r.dim = n;
    r.orientable = (br.orientable == TriState::Yes) ? TriState::Yes : TriState::Unknown;
    if (br.ctm_trivial == TriState::Yes && (p == 2 || canonical))
        r.ctm_trivial = TriState::Yes;
    // Framed surgery below the middle dimension keeps stable parallelizability.
    if (br.stably_parallelizable == TriState::Yes && p <= 1 && canonical)
        r.stably_parallelizable = TriState::Yes;

    if (p == 1 && n >= 4 && br.pi1) {
        if (auto w = parse_relator_spec(spec, *br.pi1)) {
            GroupPresentation np = *br.pi1;
            np.relators.push_back(*w);
            r.pi1 = std::move(np);
        }
    } else if (p == 2 && n >= 5 && br.pi1) {
        r.pi1 = br.pi1;
    }
    r.simply_connected = TriState::Unknown;  // refined from pi1 in normalization

    if (n % 2 == 0 && br.euler) {
        // Inclusion-exclusion over the glued pieces: chi changes by -2, +2, -2
        // for p = 0, 1, 2.
        r.euler = *br.euler + (p == 1 ? 2 : -2);
    }
    r.homology.groups.resize(n + 1);
    normalize_record(r);
    return r;
}

InvariantRecord torus_bundle_record(const InvariantRecord& base, int k) {
    if (k < 1) throw ValidationError("torus bundle rank must be at least 1");
    InvariantRecord r;
    r.dim = base.dim + k;
    r.orientable = (base.orientable == TriState::Yes) ? TriState::Yes : TriState::Unknown;
    if (base.orientable == TriState::Yes && base.ctm_trivial == TriState::Yes)
        r.ctm_trivial = TriState::Yes;
    r.homology.groups.resize(r.dim + 1);
    normalize_record(r);
    return r;
}

}  // namespace

bool HomologyProfile::fully_known() const {
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.has_value(); });
}

bool HomologyProfile::fully_free() const {
    return std::all_of(groups.begin(), groups.end(),
                       [](const auto& g) { return g && g->is_torsion_free(); });
}

std::optional<int> semi_characteristic_of_profile(const HomologyProfile& profile, int dim) {
    if (dim % 2 == 0) throw DomainError("semi-characteristic is defined only in odd dimensions");
    const int k = (dim - 1) / 2;
    std::size_t total = 0;
    for (int i = 0; i <= k; ++i) {
        if (i >= static_cast<int>(profile.groups.size()) || !profile.groups[i])
            return std::nullopt;
        auto [hom, ext] = profile.groups[i]->mod2_hom_ext_dims();
        total += hom;
        if (i >= 1) {
            if (!profile.groups[i - 1]) return std::nullopt;
            total += profile.groups[i - 1]->mod2_hom_ext_dims().second;
        }
    }
    return static_cast<int>(total % 2);
}

bool Manifold::structurally_equal(const Manifold& other) const {
    if (node_ != other.node_) return false;
    switch (node_) {
        case NodeKind::Atom:
            return atom_ == other.atom_;
        case NodeKind::ConnectedSum:
            return reverse_second_ == other.reverse_second_ &&
                   left_->structurally_equal(*other.left_) &&
                   right_->structurally_equal(*other.right_);
        case NodeKind::Product:
            return left_->structurally_equal(*other.left_) &&
                   right_->structurally_equal(*other.right_);
        case NodeKind::Surgery:
            return surgery_p_ == other.surgery_p_ &&
                   canonical_framing_ == other.canonical_framing_ &&
                   sphere_spec_ == other.sphere_spec_ && left_->structurally_equal(*other.left_);
        case NodeKind::TorusBundleTotal:
            return torus_rank_ == other.torus_rank_ && left_->structurally_equal(*other.left_);
    }
    return false;
}

ManifoldPtr Manifold::make_atom(BlockAtom atom) {
    auto m = std::shared_ptr<Manifold>(new Manifold());
    m->node_ = NodeKind::Atom;
    m->atom_ = atom;
    m->record_ = atom_record(atom);
    return m;
}

ManifoldPtr Manifold::make_connected_sum(ManifoldPtr left, ManifoldPtr right,
                                         bool reverse_second) {
    auto m = std::shared_ptr<Manifold>(new Manifold());
    m->node_ = NodeKind::ConnectedSum;
    m->record_ = connected_sum_record(left->record(), right->record(), reverse_second);
    m->left_ = std::move(left);
    m->right_ = std::move(right);
    m->reverse_second_ = reverse_second;
    return m;
}

ManifoldPtr Manifold::make_product(ManifoldPtr left, ManifoldPtr right) {
    auto m = std::shared_ptr<Manifold>(new Manifold());
    m->node_ = NodeKind::Product;
    m->record_ = product_record(left->record(), right->record());
    m->left_ = std::move(left);
    m->right_ = std::move(right);
    return m;
}

ManifoldPtr Manifold::make_surgery(ManifoldPtr base, int p, bool canonical_framing,
                                   std::string sphere_spec) {
    auto m = std::shared_ptr<Manifold>(new Manifold());
    m->node_ = NodeKind::Surgery;
    m->record_ = surgery_record(*base, p, canonical_framing, sphere_spec);
    m->left_ = std::move(base);
    m->surgery_p_ = p;
    m->canonical_framing_ = canonical_framing;
    m->sphere_spec_ = std::move(sphere_spec);
    return m;
}

ManifoldPtr Manifold::make_torus_bundle_total(ManifoldPtr base, int k) {
    auto m = std::shared_ptr<Manifold>(new Manifold());
    m->node_ = NodeKind::TorusBundleTotal;
    m->record_ = torus_bundle_record(base->record(), k);
    m->left_ = std::move(base);
    m->torus_rank_ = k;
    return m;
}

ManifoldPtr sphere(int n) { return Manifold::make_atom({AtomKind::Sphere, n, 0}); }
ManifoldPtr torus(int n) { return Manifold::make_atom({AtomKind::Torus, n, 0}); }
ManifoldPtr wu_manifold() { return Manifold::make_atom({AtomKind::Wu, 0, 0}); }
ManifoldPtr m_block(int p, int k) { return Manifold::make_atom({AtomKind::M, p, k}); }
ManifoldPtr x_block(int k) { return Manifold::make_atom({AtomKind::X, k, 0}); }
ManifoldPtr twisted_s3s2() { return Manifold::make_atom({AtomKind::TwistedS3S2, 0, 0}); }
ManifoldPtr cp2_connsum_cp2bar() { return Manifold::make_atom({AtomKind::Cp2ConnSumCp2Bar, 0, 0}); }

const HomologyProfile& homology(const ManifoldPtr& d) { return d->record().homology; }

std::optional<long long> euler_characteristic(const ManifoldPtr& d) { return d->record().euler; }

std::optional<int> semi_characteristic(const ManifoldPtr& d) {
    if (d->dim() % 2 == 0)
        throw DomainError("semi-characteristic is defined only in odd dimensions");
    return d->record().semi_char;
}

const InvariantRecord& invariants(const ManifoldPtr& d) { return d->record(); }

TriState parallelizable_flag(const InvariantRecord& r) {
    if (r.dim % 2 == 0) return TriState::Unknown;
    if (r.dim == 1 || r.dim == 3 || r.dim == 7)
        return r.stably_parallelizable;  // no semi-characteristic obstruction here
    if (r.stably_parallelizable == TriState::No) return TriState::No;
    if (r.stably_parallelizable == TriState::Yes && r.semi_char)
        return tri_of(*r.semi_char == 0);
    return TriState::Unknown;
}

bool outside_table_parameters(const ManifoldPtr& d) {
    if (d->node() != NodeKind::Atom) return false;
    const BlockAtom& a = d->atom();
    if (a.kind != AtomKind::M) return false;
    auto f = factor_prime_powers(Int(a.a));
    return f.size() != 1;  // composite p: accepted, but not a table row
}

std::string atom_name(const BlockAtom& atom) {
    switch (atom.kind) {
        case AtomKind::Sphere: return "S" + std::to_string(atom.a);
        case AtomKind::Torus: return "T" + std::to_string(atom.a);
        case AtomKind::Wu: return "wu";
        case AtomKind::M:
            return "m(" + std::to_string(atom.a) + "," + std::to_string(atom.b) + ")";
        case AtomKind::X: return "xk(" + std::to_string(atom.a) + ")";
        case AtomKind::TwistedS3S2: return "s3tws2";
        case AtomKind::Cp2ConnSumCp2Bar: return "cp2cp2bar";
    }
    return "?";
}

}  // namespace totreal
