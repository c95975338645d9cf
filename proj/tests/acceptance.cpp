// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is exact integer/parity arithmetic.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schema_check.hpp"
#include "totreal/abelian.hpp"
#include "totreal/cohomology6.hpp"
#include "totreal/constructions.hpp"
#include "totreal/decisions.hpp"
#include "totreal/errors.hpp"
#include "totreal/parser.hpp"
#include "totreal/report.hpp"

using namespace totreal;

namespace {

int failures = 0;
std::vector<nlohmann::json> collected_reports;  // fed into criterion 10

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error("check failed: " + what);
}

void criterion(int n, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << n << ": " << name << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << n << ": " << name << " -- " << e.what() << "\n";
    }
}

void collect_report(const ManifoldPtr& d) {
    Report r = make_decide_report(print_descriptor(d), d);
    collected_reports.push_back(report_to_json(r, true));
}

ManifoldPtr s2s3() { return product(sphere(2), sphere(3)); }

// --- criterion bodies -------------------------------------------------------

void table_rows() {
    auto rows = table1_selfcheck();
    require(rows.size() == 6, "six table rows");
    for (const auto& row : rows) {
        require(row.passed, row.name + ": " + row.detail);
        collect_report(row.manifold);
    }
}

void semi_char_formulas() {
    for (int n = 1; n <= 50; ++n) {
        ManifoldPtr handles = connected_sum_copies(s2s3(), n);
        require(*semi_characteristic(handles) == (n + 1) % 2,
                "n(S2 x S3), n = " + std::to_string(n));
        ManifoldPtr tw = twisted_s3s2();
        if (n > 1) tw = connected_sum(tw, connected_sum_copies(s2s3(), n - 1));
        require(*semi_characteristic(tw) == (n + 1) % 2,
                "s3tws2 # (n-1)(S2 x S3), n = " + std::to_string(n));
    }
    collect_report(connected_sum(twisted_s3s2(), connected_sum_copies(s2s3(), 3)));
}

void five_dim_parity_corollary() {
    for (int k = 1; k <= 25; ++k) {
        // Odd handle counts embed, even counts do not.
        auto odd = decide(connected_sum_copies(s2s3(), 2 * k - 1));
        require(odd.embedding == TriState::Yes, "(2k-1) handles, k = " + std::to_string(k));
        auto even = decide(connected_sum_copies(s2s3(), 2 * k));
        require(even.embedding == TriState::No, "2k handles, k = " + std::to_string(k));

        ManifoldPtr tw = twisted_s3s2();
        if (k > 1) tw = connected_sum(tw, connected_sum_copies(s2s3(), 2 * k - 2));
        require(decide(tw).embedding == TriState::Yes,
                "s3tws2 # (2k-2) handles, k = " + std::to_string(k));
        ManifoldPtr tw_bad = connected_sum(twisted_s3s2(), connected_sum_copies(s2s3(), 2 * k - 1));
        require(decide(tw_bad).embedding == TriState::No,
                "s3tws2 # (2k-1) handles, k = " + std::to_string(k));
    }
    collect_report(connected_sum_copies(s2s3(), 3));
}

void five_dim_irreducible_list() {
    struct Row {
        ManifoldPtr m;
        bool embeds;
    };
    std::vector<Row> rows = {{sphere(5), false},   {s2s3(), true},        {m_block(3, 2), false},
                             {wu_manifold(), true}, {twisted_s3s2(), true}, {x_block(2), false}};
    for (const auto& row : rows) {
        auto d = decide(row.m);
        require(d.immersion == TriState::Yes, print_descriptor(row.m) + " immersion");
        require(d.embedding == (row.embeds ? TriState::Yes : TriState::No),
                print_descriptor(row.m) + " embedding");
        collect_report(row.m);
    }
}

void six_dim_examples() {
    auto s3s3 = product(sphere(3), sphere(3));
    require(decide(s3s3).embedding == TriState::Yes, "S3 x S3 embeds");
    require(decide(sphere(6)).immersion == TriState::Yes, "S6 immerses");
    require(decide(sphere(6)).embedding == TriState::No, "S6 does not embed");
    collect_report(s3s3);
    collect_report(sphere(6));
    for (int n = 2; n <= 10; ++n) {
        auto m = connected_sum_copies(s3s3, n);
        require(*euler_characteristic(m) == 2 - 2 * n, "chi of n(S3 x S3)");
        auto d = decide(m);
        require(d.immersion == TriState::Yes, "n(S3 x S3) immerses");
        require(d.embedding == TriState::No, "n(S3 x S3) does not embed");
    }
    collect_report(connected_sum_copies(s3s3, 2));
}

void sphere_suite() {
    require(decide(sphere(1)).embedding == TriState::Yes, "S1");
    require(decide(sphere(3)).embedding == TriState::Yes, "S3");
    for (int n = 1; n <= 12; ++n) {
        auto d = decide(sphere(n));
        require(d.immersion == TriState::Yes, "S" + std::to_string(n) + " immerses");
        if (n >= 4)
            require(d.embedding == TriState::No, "S" + std::to_string(n) + " does not embed");
        collect_report(sphere(n));
    }
}

void chern_identities() {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> rank(0, 3), entry(-3, 3);
    for (int it = 0; it < 10000; ++it) {
        CohomologyRing6 r;
        r.b2 = rank(rng);
        r.b4 = rank(rng);
        r.cup22.assign(r.b2, std::vector<std::vector<std::int64_t>>(
                                 r.b2, std::vector<std::int64_t>(r.b4, 0)));
        for (int i = 0; i < r.b2; ++i)
            for (int j = i; j < r.b2; ++j)
                for (int k = 0; k < r.b4; ++k) r.cup22[i][j][k] = r.cup22[j][i][k] = entry(rng);
        r.pair24.assign(r.b2, std::vector<std::int64_t>(r.b4, 0));
        FormalChernData c;
        c.c1.resize(r.b2);
        c.c2.resize(r.b4);
        for (auto& v : c.c1) v = entry(rng);
        for (auto& v : c.c2) v = entry(rng);
        c.c3 = entry(rng);

        auto cc = complexified_chern(c, r);
        for (auto v : cc.c1) require(v == 0, "c1 of the complexification vanishes");
        require(cc.c3 == 0, "c3 of the complexification vanishes");
        // Independent expansion: diagonal plus doubled off-diagonal terms.
        for (int k = 0; k < r.b4; ++k) {
            std::int64_t sq = 0;
            for (int i = 0; i < r.b2; ++i) sq += c.c1[i] * c.c1[i] * r.cup22[i][i][k];
            for (int i = 0; i < r.b2; ++i)
                for (int j = i + 1; j < r.b2; ++j)
                    sq += 2 * c.c1[i] * c.c1[j] * r.cup22[i][j][k];
            require(cc.c2[k] == 2 * c.c2[k] - sq, "c2 = 2 c2 - c1^2");
        }
    }
    // (1 + h)^4 truncated at degree 6, with h^2 = f and <h, f> = 1.
    CohomologyRing6 p3;
    p3.b2 = p3.b4 = 1;
    p3.cup22 = {{{1}}};
    p3.pair24 = {{1}};
    FormalChernData c{{4}, {6}, 4};
    require(p1_is_zero(c, p3) == TriState::No, "projective-space-like p1 nonzero");
    require(complexified_chern(c, p3).c2[0] == -4, "2*6 - 16 = -4");
}

void group_pipeline() {
    const char* presentations[] = {"|", "a|", "a,b|abAB", "a|aaaaa", "a,b|aaBBB"};
    for (const char* pres : presentations) {
        GroupPresentation p = parse_presentation(pres);
        for (int n : {6, 8, 10}) {
            auto [m, cert] = normalize_for_embedding(p, n);
            require(*euler_characteristic(m) == 0, std::string(pres) + ": chi = 0 in dim " +
                                                       std::to_string(n));
            require(*m->record().homology.groups[1] == abelianization(p),
                    std::string(pres) + ": H1 = abelianization");
            require(replay_certificate(cert)->structurally_equal(*m),
                    std::string(pres) + ": certificate replays");
            Report r = make_decide_report(print_descriptor(m), m);
            r.certificate = &cert;
            collected_reports.push_back(report_to_json(r, true));
        }
        auto [m5, cert5] = normalize_for_embedding(p, 5);
        require(cert5.second_branch.has_value(), std::string(pres) + ": two-branch certificate");
        require(cert5.branch_note.has_value(), std::string(pres) + ": branch note");

        auto [m7, cert7] = normalize_for_embedding(p, 7);
        require(cert7.product_certificate, std::string(pres) + ": product certificate");
        // Justification chain: the last factor embeds, the rest immerses, and
        // the decision engine derives the embedding through the product rule.
        require(m7->node() == NodeKind::Product, "product shape");
        require(m7->right()->structurally_equal(*sphere(3)), "embedding factor S3");
        require(decide(m7->left()).immersion == TriState::Yes, "immersion factor");
        auto d7 = decide(m7);
        require(d7.embedding == TriState::Yes, "product embeds");
        bool via_r13 = false;
        for (const auto& a : d7.embedding_trace)
            if (a.rule_id == "R13") via_r13 = true;
        require(via_r13, "embedding justified by the product rule");
    }
}

// Independent elementary-operation reduction, no transforms, no shared code
// path with the library (mirrors the oracle in the unit suite).
std::vector<Int> snf_oracle(IntegerMatrix m) {
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < m.rows() && t < m.cols()) {
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j)
                if (m.at(i, j) != 0 && (!found || abs(m.at(i, j)) < abs(m.at(pr, pc)))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, t), m.at(i, pc));
        bool dirty = false;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            Int q = m.at(i, t) / m.at(t, t);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            Int q = m.at(t, j) / m.at(t, t);
            for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        bool divides = true;
        for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
            for (std::size_t j = t + 1; j < m.cols() && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (std::size_t jj = 0; jj < m.cols(); ++jj) m.at(t, jj) += m.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    return diag;
}

ManifoldPtr random_known(std::mt19937& rng, int depth = 0) {
    std::uniform_int_distribution<int> kind(0, depth >= 2 ? 4 : 6);
    switch (kind(rng)) {
        case 0: return sphere(std::uniform_int_distribution<int>(2, 6)(rng));
        case 1: return torus(std::uniform_int_distribution<int>(2, 4)(rng));
        case 2: return wu_manifold();
        case 3: return m_block(std::uniform_int_distribution<int>(2, 7)(rng), 1);
        case 4: return x_block(std::uniform_int_distribution<int>(1, 3)(rng));
        case 5:
            return product(random_known(rng, depth + 1),
                           sphere(std::uniform_int_distribution<int>(1, 4)(rng)));
        default: {
            auto a = random_known(rng, depth + 1);
            return connected_sum(a, a);
        }
    }
}

void property_suites() {
    std::mt19937 rng(9091);
    // SNF vs the elementary-operation oracle.
    std::uniform_int_distribution<std::size_t> side(1, 6);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int it = 0; it < 1000; ++it) {
        IntegerMatrix m(side(rng), side(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        SmithResult r = smith_normal_form(m);
        require(abs(r.u.determinant()) == 1 && abs(r.v.determinant()) == 1, "unimodular U, V");
        require(r.u * m * r.v == r.d, "D = U M V");
        auto oracle = snf_oracle(m);
        for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
            require(r.d.at(t, t) == (t < oracle.size() ? oracle[t] : Int(0)), "oracle diagonal");
    }
    // Connected-sum homology and Euler identities.
    int pairs = 0;
    while (pairs < 1000) {
        auto a = random_known(rng), b = random_known(rng);
        if (a->dim() != b->dim()) continue;
        auto s = connected_sum(a, b);
        long long sphere_chi = a->dim() % 2 == 0 ? 2 : 0;
        require(*euler_characteristic(s) ==
                    *euler_characteristic(a) + *euler_characteristic(b) - sphere_chi,
                "chi additivity");
        for (int i = 1; i < s->dim(); ++i)
            require(*homology(s).groups[i] ==
                        homology(a).groups[i]->direct_sum(*homology(b).groups[i]),
                    "interior homology additivity");
        ++pairs;
    }
    // Rule-base consistency over all <= 3-atom 5-dimensional expressions.
    std::vector<ManifoldPtr> atoms = {sphere(5),      s2s3(),         m_block(3, 1),
                                      m_block(2, 2),  wu_manifold(),  twisted_s3s2(),
                                      x_block(1),     x_block(2)};
    std::vector<ManifoldPtr> pool = atoms;
    for (const auto& a : atoms)
        for (const auto& b : atoms) pool.push_back(connected_sum(a, b));
    for (const auto& a : atoms)
        for (const auto& b : atoms)
            for (const auto& c : atoms) pool.push_back(connected_sum(connected_sum(a, b), c));
    for (const auto& m : pool) (void)decide(m);  // EngineFault would abort the criterion
    // Monotonicity under invariant masking.
    std::uniform_int_distribution<int> coin(0, 1);
    for (int it = 0; it < 100; ++it) {
        auto m = random_known(rng);
        Decision full = decide_record(m->record(), {});
        InvariantRecord r = m->record();
        if (coin(rng)) r.euler.reset();
        if (coin(rng)) r.semi_char.reset();
        if (coin(rng)) r.w2_zero = TriState::Unknown;
        if (coin(rng)) r.p1_zero = TriState::Unknown;
        if (coin(rng)) r.stably_parallelizable = TriState::Unknown;
        if (coin(rng)) r.ctm_trivial = TriState::Unknown;
        if (coin(rng)) r.simply_connected = TriState::Unknown;
        Decision less = decide_record(r, {});
        if (is_known(less.immersion))
            require(less.immersion == full.immersion, "immersion never flips");
        if (is_known(less.embedding))
            require(less.embedding == full.embedding, "embedding never flips");
    }
}

void cli_surface() {
    // Parse/print round-trip on generated expressions.
    std::mt19937 rng(112358);
    std::uniform_int_distribution<int> kind(0, 7), n5(0, 3);
    std::vector<ManifoldPtr> atoms = {sphere(5), s2s3(), m_block(3, 1), wu_manifold(),
                                      twisted_s3s2(), x_block(2)};
    for (int it = 0; it < 10000; ++it) {
        ManifoldPtr d;
        switch (kind(rng)) {
            case 0: d = sphere(std::uniform_int_distribution<int>(1, 8)(rng)); break;
            case 1: d = torus(std::uniform_int_distribution<int>(1, 5)(rng)); break;
            case 2: d = connected_sum(atoms[n5(rng)], atoms[n5(rng)]); break;
            case 3:
                d = connected_sum(atoms[n5(rng)], connected_sum(atoms[n5(rng)], atoms[n5(rng)]));
                break;
            case 4: d = product(sphere(2), product(sphere(3), sphere(2))); break;
            case 5:
                d = surgery(product(sphere(1), sphere(4)), 1, true, "a");
                break;
            case 6: d = torus_bundle_total(atoms[n5(rng)], 2); break;
            default: d = connected_sum(wu_manifold(), wu_manifold(), true); break;
        }
        std::string text = print_descriptor(d);
        ManifoldPtr back = parse_descriptor(text);
        require(back->structurally_equal(*d), "round trip: " + text);
        require(print_descriptor(back) == text, "idempotent print: " + text);
    }
    // table1-selfcheck as the CLI computes it.
    for (const auto& row : table1_selfcheck()) require(row.passed, "selfcheck row " + row.name);
    // Schema validation over every report collected from criteria 1-8.
    nlohmann::json schema = schema_check::load_schema(SCHEMA_PATH);
    require(collected_reports.size() >= 30, "reports were collected along the way");
    for (const auto& doc : collected_reports) {
        std::string err;
        require(schema_check::validate(doc, schema, err), "schema: " + err);
    }
}

}  // namespace

int main() {
    criterion(1, "building-block table reproduction (6/6 rows)", table_rows);
    criterion(2, "semi-characteristic parity formulas, n = 1..50", semi_char_formulas);
    criterion(3, "5-dimensional embedding parity corollary, k = 1..25", five_dim_parity_corollary);
    criterion(4, "irreducible 5-block verdict list", five_dim_irreducible_list);
    criterion(5, "6-dimensional examples (S3 x S3, S6, n(S3 x S3))", six_dim_examples);
    criterion(6, "sphere axiom suite, N = 1..12", sphere_suite);
    criterion(7, "Chern identity suite, 10^4 random inputs + projective example",
              chern_identities);
    criterion(8, "group realization pipeline, 5 presentations x N in {5,6,7,8,10}",
              group_pipeline);
    criterion(9, "property suites: SNF oracle, sum identities, consistency, monotonicity",
              property_suites);
    criterion(10, "CLI round-trip, selfcheck, schema validation of all collected reports",
              cli_surface);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
}
