#include "totreal/decisions.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "totreal/errors.hpp"

namespace totreal {

namespace {

const std::vector<RuleInfo>& catalog() {
    static const std::vector<RuleInfo> rules = {
        {"R1", "immersion iff the complexified tangent bundle is trivial",
         {"Wells; Gromov",
          "a closed N-manifold admits a totally real immersion into C^N if and only if its "
          "complexified tangent bundle is a trivial bundle of rank N"}},
        {"R2", "stably parallelizable implies immersion",
         {"Jacobowitz-Landweber, Lemma 1.2; Gromov",
          "every stably parallelizable N-manifold admits a totally real immersion into C^N"}},
        {"R3", "even dimension, immersion given: embedding iff chi = 0",
         {"Audin",
          "an orientable even-dimensional manifold with a totally real immersion admits a "
          "totally real embedding if and only if its Euler characteristic vanishes"}},
        {"R4", "dimension 1 mod 4, immersion given: embedding iff semi-characteristic = 0",
         {"Audin",
          "in dimensions N = 4k+1 a totally real immersion upgrades to a totally real "
          "embedding if and only if the Kervaire semi-characteristic vanishes"}},
        {"R5", "dimension 1", {"classical", "the circle has a totally real embedding into C"}},
        {"R6", "dimension 2, orientable",
         {"classical",
          "every closed orientable surface admits a totally real immersion into C^2; the "
          "2-torus is the only orientable closed surface that admits a totally real embedding"}},
        {"R7", "dimension 3, orientable",
         {"Forstneric; Ahern-Rudin",
          "every closed orientable 3-manifold admits a totally real embedding into C^3"}},
        {"R8", "dimension 4, orientable: immersion iff p1 = 0",
         {"Jacobowitz-Landweber, Corollary 4.1",
          "a closed smooth orientable 4-manifold admits a totally real immersion into C^4 if "
          "and only if its first Pontrjagin class vanishes"}},
        {"R9", "simply connected 5-manifold: immersion always",
         {"Barden; Smale; Audin",
          "every closed smooth simply connected 5-manifold admits a totally real immersion "
          "into C^5"}},
        {"R10", "orientable 6-manifold without 2-torsion in H^3: immersion iff p1 = 0",
         {"Wall; Okonek-Van de Ven",
          "a closed smooth orientable 6-manifold without 2-torsion in H^3 admits a totally "
          "real immersion into C^6 if and only if p1 = 0, and a totally real embedding if "
          "and only if additionally chi = 0"}},
        {"R11", "2-connected 6-manifold",
         {"Smale",
          "every closed smooth 2-connected 6-manifold admits a totally real immersion into "
          "C^6 and embeds if and only if it is diffeomorphic to S^3 x S^3"}},
        {"R12", "sphere of dimension above 3: no embedding",
         {"Gromov; Stout-Zame",
          "every N-sphere admits a totally real immersion into C^N, yet no totally real "
          "embedding exists if N > 3"}},
        {"R13", "product of an immersion factor with an embedding factor embeds",
         {"Audin, 6.2.3 Remarque",
          "a totally real immersion of X and a totally real embedding of Y yield a totally "
          "real embedding of X x Y"}},
        {"IMP-EI", "an embedding is in particular an immersion",
         {"definition", "a totally real embedding is a totally real immersion"}},
        {"IMP-IE", "no immersion, hence no embedding",
         {"definition", "a totally real embedding is a totally real immersion"}},
    };
    return rules;
}

struct Candidate {
    TriState value;
    RuleApplication app;
};

RuleApplication app(const std::string& id,
                    std::vector<std::pair<std::string, std::string>> inputs) {
    return {id, rule(id).citation, std::move(inputs)};
}

std::string chi_str(const std::optional<long long>& chi) {
    return chi ? std::to_string(*chi) : "unknown";
}

// H^3 integral torsion equals the torsion of H_2 by universal coefficients.
bool no_2torsion_in_h3(const InvariantRecord& r) {
    return r.dim >= 2 && r.homology.groups.size() > 2 && r.homology.groups[2] &&
           !r.homology.groups[2]->has_2torsion();
}

bool two_connected(const InvariantRecord& r) {
    return r.simply_connected == TriState::Yes && r.homology.groups.size() > 2 &&
           r.homology.groups[2] && r.homology.groups[2]->is_trivial();
}

void gather_immersion(const InvariantRecord& r, const StructuralFacts& f,
                      std::vector<Candidate>& out) {
    // Structure-specific rules first; priority affects only trace order since
    // consistency is enforced over all candidates.
    if (r.dim == 5 && r.simply_connected == TriState::Yes)
        out.push_back({TriState::Yes, app("R9", {{"dim", "5"}, {"simply_connected", "yes"}})});
    if (r.dim == 6 && two_connected(r))
        out.push_back({TriState::Yes, app("R11", {{"dim", "6"}, {"2_connected", "yes"}})});
    if (f.sphere_atom_dim)
        out.push_back({TriState::Yes,
                       app("R12", {{"sphere_dim", std::to_string(*f.sphere_atom_dim)}})});
    if (r.dim == 1) out.push_back({TriState::Yes, app("R5", {{"dim", "1"}})});
    if (r.dim == 2 && r.orientable == TriState::Yes)
        out.push_back({TriState::Yes, app("R6", {{"dim", "2"}, {"orientable", "yes"}})});
    if (r.dim == 3 && r.orientable == TriState::Yes)
        out.push_back({TriState::Yes, app("R7", {{"dim", "3"}, {"orientable", "yes"}})});
    if (r.dim == 4 && r.orientable == TriState::Yes && is_known(r.p1_zero))
        out.push_back({r.p1_zero,
                       app("R8", {{"dim", "4"}, {"p1_zero", to_string(r.p1_zero)}})});
    if (r.dim == 6 && r.orientable == TriState::Yes && no_2torsion_in_h3(r) &&
        is_known(r.p1_zero))
        out.push_back({r.p1_zero,
                       app("R10", {{"dim", "6"},
                                   {"no_2torsion_H3", "yes"},
                                   {"p1_zero", to_string(r.p1_zero)}})});
    if (r.stably_parallelizable == TriState::Yes)
        out.push_back({TriState::Yes, app("R2", {{"stably_parallelizable", "yes"}})});
    if (is_known(r.ctm_trivial))
        out.push_back({r.ctm_trivial, app("R1", {{"ctm_trivial", to_string(r.ctm_trivial)}})});
}

void gather_embedding(const InvariantRecord& r, const StructuralFacts& f, TriState immersion,
                      std::vector<Candidate>& out) {
    if (immersion == TriState::No)
        out.push_back({TriState::No, app("IMP-IE", {{"immersion", "no"}})});
    if (f.sphere_atom_dim && *f.sphere_atom_dim > 3)
        out.push_back({TriState::No,
                       app("R12", {{"sphere_dim", std::to_string(*f.sphere_atom_dim)}})});
    if (r.dim == 1) out.push_back({TriState::Yes, app("R5", {{"dim", "1"}})});
    if (r.dim == 2 && r.orientable == TriState::Yes && r.euler)
        out.push_back({tri_of(*r.euler == 0),
                       app("R6", {{"dim", "2"}, {"chi", chi_str(r.euler)}})});
    if (r.dim == 3 && r.orientable == TriState::Yes)
        out.push_back({TriState::Yes, app("R7", {{"dim", "3"}, {"orientable", "yes"}})});
    if (r.dim == 6 && two_connected(r) && r.euler)
        out.push_back({tri_of(*r.euler == 0),
                       app("R11", {{"2_connected", "yes"}, {"chi", chi_str(r.euler)}})});
    if (r.dim >= 4 && r.dim % 2 == 0 && r.orientable == TriState::Yes && r.euler) {
        if (*r.euler != 0) {
            // An embedding would force an immersion, and then chi = 0.
            out.push_back({TriState::No,
                           app("R3", {{"dim", std::to_string(r.dim)}, {"chi", chi_str(r.euler)}})});
        } else if (immersion == TriState::Yes) {
            out.push_back({TriState::Yes,
                           app("R3", {{"dim", std::to_string(r.dim)},
                                      {"chi", "0"},
                                      {"immersion", "yes"}})});
        }
    }
    if (r.dim % 4 == 1 && r.dim >= 5 && r.orientable == TriState::Yes && r.semi_char) {
        if (*r.semi_char != 0) {
            out.push_back({TriState::No,
                           app("R4", {{"dim", std::to_string(r.dim)}, {"semi_char", "1"}})});
        } else if (immersion == TriState::Yes) {
            out.push_back({TriState::Yes,
                           app("R4", {{"dim", std::to_string(r.dim)},
                                      {"semi_char", "0"},
                                      {"immersion", "yes"}})});
        }
    }
    if (f.is_product && f.product_children) {
        const Decision& a = f.product_children->first;
        const Decision& b = f.product_children->second;
        if ((a.immersion == TriState::Yes && b.embedding == TriState::Yes) ||
            (a.embedding == TriState::Yes && b.immersion == TriState::Yes))
            out.push_back({TriState::Yes,
                           app("R13", {{"factor_immersion", "yes"}, {"factor_embedding", "yes"}})});
    }
}

// First yes/no wins the slot; every later contradiction is an engine fault.
TriState merge(const std::vector<Candidate>& cands, std::vector<RuleApplication>& trace,
               const char* slot) {
    TriState verdict = TriState::Unknown;
    for (const Candidate& c : cands) {
        if (c.value == TriState::Unknown) continue;
        if (verdict == TriState::Unknown) {
            verdict = c.value;
            trace.push_back(c.app);
        } else if (c.value != verdict) {
            throw EngineFault(std::string("rule base inconsistency on ") + slot + ": " +
                              trace.front().rule_id + " says " + to_string(verdict) + ", " +
                              c.app.rule_id + " says " + to_string(c.value));
        }
    }
    return verdict;
}

}  // namespace

const std::vector<RuleInfo>& rule_catalog() { return catalog(); }

const RuleInfo& rule(const std::string& id) {
    for (const RuleInfo& r : catalog())
        if (r.id == id) return r;
    throw ValidationError("unknown rule id '" + id + "'");
}

std::string rule_catalog_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const RuleInfo& r : catalog())
        j.push_back({{"rule_id", r.id},
                     {"hypothesis", r.hypothesis},
                     {"citation", r.citation.source},
                     {"quote", r.citation.quote}});
    return j.dump(2);
}

Decision decide_record(const InvariantRecord& r, const StructuralFacts& facts) {
    Decision d;
    std::vector<Candidate> imm;
    gather_immersion(r, facts, imm);
    d.immersion = merge(imm, d.immersion_trace, "immersion");

    std::vector<Candidate> emb;
    gather_embedding(r, facts, d.immersion, emb);
    d.embedding = merge(emb, d.embedding_trace, "embedding");

    if (d.embedding == TriState::Yes) {
        if (d.immersion == TriState::No)
            throw EngineFault("embedding = yes with immersion = no");
        if (d.immersion == TriState::Unknown) {
            d.immersion = TriState::Yes;
            d.immersion_trace.push_back({"IMP-EI", rule("IMP-EI").citation, {{"embedding", "yes"}}});
        }
    }
    return d;
}

Decision decide(const ManifoldPtr& d) {
    StructuralFacts facts;
    if (d->node() == NodeKind::Atom && d->atom().kind == AtomKind::Sphere)
        facts.sphere_atom_dim = d->atom().a;
    // Torus(1) is the circle; dimension-1 rules already cover it.
    if (d->node() == NodeKind::Product) {
        facts.is_product = true;
        facts.product_children = {decide(d->left()), decide(d->right())};
    }
    return decide_record(d->record(), facts);
}

namespace {

// Flattens a connected-sum tree into 5-dimensional catalog blocks.
// Returns false when a leaf is not a recognized block.
bool collect_blocks(const ManifoldPtr& d, std::map<std::string, int>& blocks) {
    if (d->node() == NodeKind::ConnectedSum)
        return collect_blocks(d->left(), blocks) && collect_blocks(d->right(), blocks);
    if (d->node() == NodeKind::Atom) {
        const BlockAtom& a = d->atom();
        switch (a.kind) {
            case AtomKind::Sphere:
                if (a.a != 5) return false;
                return true;  // identity summand
            case AtomKind::Wu:
            case AtomKind::M:
            case AtomKind::X:
            case AtomKind::TwistedS3S2:
                ++blocks[atom_name(a)];
                return true;
            default:
                return false;
        }
    }
    if (d->node() == NodeKind::Product && d->left()->node() == NodeKind::Atom &&
        d->right()->node() == NodeKind::Atom &&
        d->left()->atom().kind == AtomKind::Sphere && d->right()->atom().kind == AtomKind::Sphere) {
        int x = d->left()->atom().a, y = d->right()->atom().a;
        if ((x == 2 && y == 3) || (x == 3 && y == 2)) {
            ++blocks["S2xS3"];
            return true;
        }
    }
    return false;
}

}  // namespace

BardenNormalForm barden_normal_form(const ManifoldPtr& d) {
    if (d->dim() != 5) throw DomainError("Barden normal form applies to 5-manifolds only");
    BardenNormalForm nf;
    std::map<std::string, int> blocks;
    if (!collect_blocks(d, blocks)) {
        nf.residual = true;
        return nf;
    }
    auto tw = blocks.find("s3tws2");
    if (tw != blocks.end()) {
        nf.delta = true;
        // Additional twisted summands carry the same H2, w2 and
        // semi-characteristic contribution as S2 x S3.
        if (tw->second > 1) blocks["S2xS3"] += tw->second - 1;
        blocks.erase(tw);
    }
    nf.blocks.assign(blocks.begin(), blocks.end());

    auto sc = d->record().semi_char;
    if (sc) nf.embedding = tri_of(*sc == 0);

    if (d->record().w2_zero == TriState::Yes) {
        std::string s = "S5";
        auto it = blocks.find("S2xS3");
        if (it != blocks.end()) s += " # " + std::to_string(it->second) + "*(S2 x S3)";
        for (const auto& [name, count] : blocks) {
            if (name == "S2xS3") continue;
            s += " # " + std::to_string(count) + "*" + name;
        }
        nf.prototype = s;
    }
    return nf;
}

TriState decide_generic(const ManifoldPtr& d) {
    const InvariantRecord& r = d->record();
    if (r.dim % 2 == 0)
        throw UnsupportedError(
            "generic immersions are decided only in the odd-dimensional hypersurface case");
    if (r.stably_parallelizable == TriState::Yes) return TriState::Yes;
    if (r.dim == 5 && r.simply_connected == TriState::Yes && is_known(r.w2_zero))
        return r.w2_zero;
    return TriState::Unknown;
}

}  // namespace totreal
