#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "totreal/abelian.hpp"
#include "totreal/errors.hpp"

using namespace totreal;

namespace {

// Independent diagonalization oracle: plain elementary row/column reduction
// with no transform tracking and no pivot strategy shared with the library.
std::vector<Int> snf_diagonal_oracle(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m.at(i, j) != 0 &&
                    (!found || abs(m.at(i, j)) < abs(m.at(pr, pc)))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            Int q = m.at(i, t) / m.at(t, t);
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            Int q = m.at(t, j) / m.at(t, t);
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (std::size_t jj = 0; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    return diag;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_side = 6, int bound = 20) {
    std::uniform_int_distribution<std::size_t> side(1, max_side);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntegerMatrix m(side(rng), side(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

FGAbelianGroup random_group(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank(0, 3), count(0, 3), prime_idx(0, 3), exp(1, 3);
    const int primes[] = {2, 3, 5, 7};
    std::vector<PrimePower> torsion;
    int c = count(rng);
    for (int i = 0; i < c; ++i)
        torsion.push_back({Int(primes[prime_idx(rng)]), static_cast<unsigned>(exp(rng))});
    return FGAbelianGroup(static_cast<std::size_t>(rank(rng)), std::move(torsion));
}

void check_snf(const IntegerMatrix& m) {
    SmithResult r = smith_normal_form(m);
    CAPTURE(m.to_string());
    REQUIRE(abs(r.u.determinant()) == 1);
    REQUIRE(abs(r.v.determinant()) == 1);
    REQUIRE(r.u * m * r.v == r.d);
    Int prev = 0;
    bool seen_zero = false;
    for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j != t) REQUIRE(r.d.at(t, j) == 0);
        const Int& d = r.d.at(t, t);
        REQUIRE(d >= 0);
        if (d == 0) {
            seen_zero = true;
        } else {
            REQUIRE(!seen_zero);
            if (prev != 0) REQUIRE(d % prev == 0);
        }
        prev = d;
    }
    auto oracle = snf_diagonal_oracle(m);
    for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
        Int expected = t < oracle.size() ? oracle[t] : Int(0);
        REQUIRE(r.d.at(t, t) == expected);
    }
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
    SUBCASE("identity") {
        auto m = IntegerMatrix::identity(2);
        auto r = smith_normal_form(m);
        CHECK(r.d == m);
        CHECK(r.u == m);
        CHECK(r.v == m);
    }
    SUBCASE("zero 1x1") {
        IntegerMatrix m(1, 1);
        auto r = smith_normal_form(m);
        CHECK(r.d.at(0, 0) == 0);
    }
    SUBCASE("[[2,4],[6,8]] -> diag(2,4)") {
        IntegerMatrix m(2, 2, {Int(2), Int(4), Int(6), Int(8)});
        auto r = smith_normal_form(m);
        CHECK(r.d.at(0, 0) == 2);  // gcd of the entries
        CHECK(r.d.at(1, 1) == 4);  // d1*d2 = |det| = 8
        CHECK(r.d.at(0, 0) * r.d.at(1, 1) == abs(m.determinant()));
        check_snf(m);
    }
    SUBCASE("empty matrix") {
        IntegerMatrix m(0, 0);
        auto r = smith_normal_form(m);
        CHECK(r.d.empty());
    }
}

TEST_CASE("smith normal form: random matrices vs oracle") {
    std::mt19937 rng(20260823);
    for (int it = 0; it < 400; ++it) check_snf(random_matrix(rng));
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        auto m = random_matrix(rng);
        auto a = smith_normal_form(m);
        auto b = smith_normal_form(m);
        CHECK(a.u == b.u);
        CHECK(a.v == b.v);
        CHECK(a.d == b.d);
    }
}

TEST_CASE("abelianization: pinned examples") {
    CHECK(abelianization(parse_presentation("a,b|abAB")) == FGAbelianGroup::free(2));
    CHECK(abelianization(parse_presentation("a|aaaaa")) == FGAbelianGroup::cyclic(5));
    // SNF of the 1x2 matrix (2, -3) is (1 0): infinite cyclic quotient.
    CHECK(abelianization(parse_presentation("a,b|aaBBB")) == FGAbelianGroup::free(1));
    CHECK(abelianization(parse_presentation("|")) == FGAbelianGroup());
    CHECK(abelianization(parse_presentation("a|")) == FGAbelianGroup::free(1));
}

TEST_CASE("presentation validation names the offending letter") {
    CHECK_THROWS_WITH_AS(parse_presentation("a|ab"), doctest::Contains("'b'"), ValidationError);
    CHECK_THROWS_AS(parse_presentation("a,b"), ValidationError);  // missing '|'
}

TEST_CASE("abelianization invariant under relator reordering and inversion") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> gens(1, 4), rels(0, 4), len(1, 6), sign(0, 1);
    for (int it = 0; it < 100; ++it) {
        GroupPresentation p;
        int g = gens(rng);
        for (int i = 0; i < g; ++i) p.generators.push_back(std::string(1, char('a' + i)));
        std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(g - 1));
        int r = rels(rng);
        for (int i = 0; i < r; ++i) {
            Word w;
            int l = len(rng);
            for (int j = 0; j < l; ++j) w.push_back({pick(rng), sign(rng) ? 1 : -1});
            p.relators.push_back(w);
        }
        auto base = abelianization(p);

        GroupPresentation shuffled = p;
        std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);
        CHECK(abelianization(shuffled) == base);

        GroupPresentation inverted = p;
        if (!inverted.relators.empty()) {
            Word& w = inverted.relators[0];
            std::reverse(w.begin(), w.end());
            for (Letter& l : w) l.sign = -l.sign;
            CHECK(abelianization(inverted) == base);
        }
    }
}

TEST_CASE("mod2 hom/ext dimensions") {
    // Hom and Ext of each cyclic summand into Z/2, enumerated by hand:
    // Z -> (1,0); Z/4 -> (1,1); Z/3 -> (0,0).
    FGAbelianGroup g = FGAbelianGroup::free(1)
                           .direct_sum(FGAbelianGroup::cyclic(4))
                           .direct_sum(FGAbelianGroup::cyclic(3));
    CHECK(g.mod2_hom_ext_dims() == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(FGAbelianGroup().mod2_hom_ext_dims() == std::pair<std::size_t, std::size_t>{0, 0});
    for (unsigned k = 1; k <= 5; ++k) {
        FGAbelianGroup two = FGAbelianGroup(0, {{2, k}, {2, k}});
        CHECK(two.mod2_hom_ext_dims() == std::pair<std::size_t, std::size_t>{2, 2});
    }
}

TEST_CASE("mod2 dims are additive over direct sums") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto g = random_group(rng), h = random_group(rng);
        auto [gh, ge] = g.mod2_hom_ext_dims();
        auto [hh, he] = h.mod2_hom_ext_dims();
        auto [sh, se] = g.direct_sum(h).mod2_hom_ext_dims();
        CHECK(sh == gh + hh);
        CHECK(se == ge + he);
    }
}

TEST_CASE("direct sum") {
    auto z = FGAbelianGroup::free(1);
    auto z2 = FGAbelianGroup::cyclic(2);
    auto s = z.direct_sum(z2);
    CHECK(s.rank() == 1);
    CHECK(s.torsion() == std::vector<PrimePower>{{2, 1}});

    auto m9 = FGAbelianGroup::cyclic(9).direct_sum(FGAbelianGroup::cyclic(9));
    auto merged = m9.direct_sum(z2);
    CHECK(merged.to_string() == "Z/2 + Z/9 + Z/9");

    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        auto g = random_group(rng);
        CHECK(g.direct_sum(FGAbelianGroup()) == g);
    }
}

TEST_CASE("group text form round-trips canonically") {
    std::mt19937 rng(123);
    for (int it = 0; it < 300; ++it) {
        auto g = random_group(rng);
        auto s = g.to_string();
        CHECK(FGAbelianGroup::parse(s) == g);
        CHECK(FGAbelianGroup::parse(s).to_string() == s);
    }
    CHECK(FGAbelianGroup::parse("Z^2 + Z/12").to_string() == "Z^2 + Z/3 + Z/4");
}

TEST_CASE("invariant factors for display") {
    // Z/2 + Z/4 + Z/3 = Z/2 + Z/12 in invariant-factor form.
    FGAbelianGroup g(0, {{2, 1}, {2, 2}, {3, 1}});
    CHECK(g.invariant_factors() == std::vector<Int>{Int(2), Int(12)});
}

TEST_CASE("canonicality: equal groups have identical stored form") {
    FGAbelianGroup a(1, {{3, 1}, {2, 2}});
    FGAbelianGroup b(1, {{2, 2}, {3, 1}});
    CHECK(a == b);
    CHECK(a.to_string() == b.to_string());
    CHECK_THROWS_AS(FGAbelianGroup(0, {{4, 1}}), ValidationError);  // 4 is not prime
}
