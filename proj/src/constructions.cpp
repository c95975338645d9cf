#include "totreal/constructions.hpp"

#include <cctype>
#include <stdexcept>

#include "totreal/errors.hpp"

namespace totreal {

namespace {

const char* kCiteKervaireMilnor =
    "Dehn; Kervaire-Milnor: every finitely presented group is the fundamental group of a "
    "closed smooth stably parallelizable N-manifold for N >= 4";
const char* kCiteSurgeryClosure =
    "surgery closure: framed surgery along S^p for 0 <= p <= 2 with the canonical framing "
    "preserves triviality of the complexified tangent bundle";
const char* kCiteConnectedSumClosure =
    "connected-sum closure: the connected sum of oriented manifolds with trivial "
    "complexified tangent bundle again has trivial complexified tangent bundle";
const char* kCiteAudinProduct =
    "Audin: a totally real immersion of X and a totally real embedding of Y yield a "
    "totally real embedding of X x Y";
const char* kCiteAudinEven =
    "Audin: an even-dimensional orientable manifold with a totally real immersion embeds "
    "totally really iff its Euler characteristic vanishes";
const char* kCiteAudinSemiChar =
    "Audin: for dim = 1 mod 4, a totally real immersion upgrades to an embedding iff the "
    "Kervaire semi-characteristic vanishes";
const char* kCiteAhernRudin = "Ahern-Rudin: S^3 admits a totally real embedding into C^3";

std::string word_to_spec(const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        char c = static_cast<char>('a' + l.generator);
        if (l.sign < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        s += c;
    }
    return s;
}

ManifoldPtr sphere_product(int a, int b) { return product(sphere(a), sphere(b)); }

}  // namespace

ManifoldPtr connected_sum(ManifoldPtr a, ManifoldPtr b, bool reverse_second) {
    return Manifold::make_connected_sum(std::move(a), std::move(b), reverse_second);
}

ManifoldPtr surgery(ManifoldPtr d, int p, bool canonical_framing, std::string sphere_spec) {
    return Manifold::make_surgery(std::move(d), p, canonical_framing, std::move(sphere_spec));
}

ManifoldPtr product(ManifoldPtr a, ManifoldPtr b) {
    return Manifold::make_product(std::move(a), std::move(b));
}

ManifoldPtr torus_bundle_total(ManifoldPtr base, int k) {
    return Manifold::make_torus_bundle_total(std::move(base), k);
}

ManifoldPtr connected_sum_copies(const ManifoldPtr& d, int n) {
    if (n < 1) throw ValidationError("connected_sum_copies: need at least one copy");
    ManifoldPtr out = d;
    for (int i = 1; i < n; ++i) out = connected_sum(out, d);
    return out;
}

std::pair<ManifoldPtr, RealizationCertificate> realize_group(const GroupPresentation& p, int n) {
    if (n < 4) throw UnsupportedError("group realization requires dimension N >= 4");
    RealizationCertificate cert;
    cert.presentation = p;
    cert.dim = n;

    const std::size_t g = p.generators.size();
    ManifoldPtr m;
    if (g == 0) {
        m = sphere(n);
        cert.steps.push_back({"sphere_base", {std::to_string(n)}, kCiteKervaireMilnor});
    } else {
        m = sphere_product(1, n - 1);
        cert.steps.push_back({"handle", {std::to_string(n)}, kCiteKervaireMilnor});
        for (std::size_t i = 1; i < g; ++i) {
            m = connected_sum(m, sphere_product(1, n - 1));
            cert.steps.push_back({"handle", {std::to_string(n)}, kCiteConnectedSumClosure});
        }
    }
    for (const Word& w : p.relators) {
        std::string spec = word_to_spec(w);
        m = surgery(m, 1, true, spec);
        cert.steps.push_back({"relator_surgery", {spec}, kCiteSurgeryClosure});
    }
    return {m, cert};
}

std::pair<ManifoldPtr, RealizationCertificate> normalize_for_embedding(const GroupPresentation& p,
                                                                       int n) {
    if (n < 5) throw UnsupportedError("embedding normalization requires dimension N >= 5");

    if (n % 2 == 0) {
        auto [m, cert] = realize_group(p, n);
        auto chi = m->record().euler;
        if (!chi) throw EngineFault("realization lost track of the Euler characteristic");
        while (*chi > 0) {
            m = connected_sum(m, sphere_product(3, n - 3));
            cert.steps.push_back({"sum_product", {"3", std::to_string(n - 3)}, kCiteAudinEven});
            chi = m->record().euler;
        }
        while (*chi < 0) {
            m = connected_sum(m, sphere_product(2, n - 2));
            cert.steps.push_back({"sum_product", {"2", std::to_string(n - 2)}, kCiteAudinEven});
            chi = m->record().euler;
        }
        return {m, cert};
    }

    if (n >= 7) {
        // Product certificate: M^4(G) x (copies of S^2) x S^3. The last factor
        // embeds, the rest immerses, so the product embeds.
        auto [m, cert] = realize_group(p, 4);
        cert.dim = n;
        cert.product_certificate = true;
        const int s2_copies = (n - 7) / 2;
        for (int i = 0; i < s2_copies; ++i) {
            m = product(m, sphere(2));
            cert.steps.push_back({"times_sphere", {"2"}, kCiteAudinProduct});
        }
        m = product(m, sphere(3));
        cert.steps.push_back(
            {"times_sphere", {"3"}, std::string(kCiteAudinProduct) + "; " + kCiteAhernRudin});
        return {m, cert};
    }

    // N = 5: the two-branch semi-characteristic certificate. Adding S^2 x S^3
    // flips the semi-characteristic and keeps the fundamental group, so exactly
    // one branch satisfies the embedding criterion.
    auto [base, cert] = realize_group(p, 5);
    ManifoldPtr second = connected_sum(base, sphere_product(2, 3));
    cert.branch_note =
        "exactly one of the realization and its connected sum with S2 x S3 has vanishing "
        "Kervaire semi-characteristic; both have the prescribed fundamental group";
    cert.second_branch = second;
    auto sc = base->record().semi_char;
    if (sc) {
        cert.chosen_branch = (*sc == 0) ? 0 : 1;
        cert.steps.push_back({"choose_branch",
                              {std::to_string(*cert.chosen_branch)},
                              kCiteAudinSemiChar});
        if (*cert.chosen_branch == 1) return {second, cert};
        return {base, cert};
    }
    return {base, cert};
}

ManifoldPtr replay_certificate(const RealizationCertificate& cert) {
    ManifoldPtr m;
    for (const ConstructionStep& s : cert.steps) {
        if (s.operation == "sphere_base") {
            m = sphere(std::stoi(s.arguments.at(0)));
        } else if (s.operation == "handle") {
            int n = std::stoi(s.arguments.at(0));
            ManifoldPtr h = sphere_product(1, n - 1);
            m = m ? connected_sum(m, h) : h;
        } else if (s.operation == "relator_surgery") {
            m = surgery(m, 1, true, s.arguments.at(0));
        } else if (s.operation == "sum_product") {
            m = connected_sum(
                m, sphere_product(std::stoi(s.arguments.at(0)), std::stoi(s.arguments.at(1))));
        } else if (s.operation == "times_sphere") {
            m = product(m, sphere(std::stoi(s.arguments.at(0))));
        } else if (s.operation == "choose_branch") {
            if (s.arguments.at(0) == "1") m = connected_sum(m, sphere_product(2, 3));
        } else {
            throw ValidationError("certificate replay: unknown step '" + s.operation + "'");
        }
    }
    if (!m) throw ValidationError("certificate replay: empty step list");
    return m;
}

}  // namespace totreal
