#ifndef TOTREAL_ABELIAN_HPP
#define TOTREAL_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace totreal {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers. All arithmetic in this
/// module is exact; no floating point anywhere.
class IntegerMatrix {
  public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix& rhs) const = default;

    /// Exact determinant by fraction-free Gaussian elimination (Bareiss).
    Int determinant() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

struct SmithResult {
    IntegerMatrix d;  // diagonal, d1 | d2 | ... | dr, nonzero entries positive
    IntegerMatrix u;  // unimodular, rows x rows
    IntegerMatrix v;  // unimodular, cols x cols; d = u * m * v
};

/// Smith normal form with transform tracking. Pivot is the smallest-absolute-
/// value nonzero entry, ties broken by (row, col), so U and V are reproducible.
SmithResult smith_normal_form(const IntegerMatrix& m);

/// One prime-power torsion summand Z/p^k.
struct PrimePower {
    Int prime;
    unsigned exponent = 1;

    Int value() const;
    bool operator==(const PrimePower&) const = default;
    bool operator<(const PrimePower& o) const {
        return prime != o.prime ? prime < o.prime : exponent < o.exponent;
    }
};

/// Finitely generated abelian group in primary decomposition,
/// Z^rank + sum of Z/p^k, torsion sorted by (prime, exponent).
class FGAbelianGroup {
  public:
    FGAbelianGroup() : rank_(0) {}
    explicit FGAbelianGroup(std::size_t rank, std::vector<PrimePower> torsion = {});

    /// Z^n
    static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank); }
    /// Z/n as a product of primary cyclic groups; n = 0 means Z, n = 1 trivial.
    static FGAbelianGroup cyclic(const Int& n);

    std::size_t rank() const { return rank_; }
    const std::vector<PrimePower>& torsion() const { return torsion_; }

    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_torsion_free() const { return torsion_.empty(); }
    bool has_2torsion() const;

    FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

    /// dim Hom(G, Z/2) = rank + #(2-primary summands);
    /// dim Ext(G, Z/2) = #(2-primary summands).
    std::pair<std::size_t, std::size_t> mod2_hom_ext_dims() const;

    /// Invariant factors d1 | d2 | ... (display only; storage stays primary).
    std::vector<Int> invariant_factors() const;

    /// Canonical text form "Z^r + Z/q1 + Z/q2 + ..." with q ascending.
    std::string to_string() const;
    static FGAbelianGroup parse(const std::string& text);

    bool operator==(const FGAbelianGroup&) const = default;

  private:
    std::size_t rank_;
    std::vector<PrimePower> torsion_;
};

inline FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.direct_sum(b);
}

/// A letter of a relator word: generator index, exponent +1 or -1.
struct Letter {
    std::size_t generator;
    int sign;
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t generator_index(const std::string& name) const;  // throws ValidationError
    bool operator==(const GroupPresentation&) const = default;
    std::string to_string() const;  // "a,b|abAB,aab" form
};

/// Parses "a,b|abAB,aab"; uppercase letters are inverses. "a|" is the free
/// group on a. Empty generator part gives the trivial presentation.
GroupPresentation parse_presentation(const std::string& text);

/// Cokernel of the relator exponent-sum matrix via Smith normal form.
FGAbelianGroup abelianization(const GroupPresentation& p);

/// Primary decomposition of Z/n by trial division. n > 1.
std::vector<PrimePower> factor_prime_powers(Int n);

}  // namespace totreal

#endif
