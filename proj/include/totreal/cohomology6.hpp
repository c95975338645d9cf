#ifndef TOTREAL_COHOMOLOGY6_HPP
#define TOTREAL_COHOMOLOGY6_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "totreal/tristate.hpp"

namespace totreal {

/// Formal degree-<=6 graded ring of a closed oriented 6-manifold: free parts
/// of H^2 and H^4 in chosen bases, the cup product H^2 x H^2 -> H^4 and the
/// pairing H^2 x H^4 -> H^6 = Z. Torsion is not modeled; callers with
/// torsion-valued classes must flag it and get Unknown answers.
struct CohomologyRing6 {
    int b2 = 0;
    int b4 = 0;
    // cup22[i][j] is the H^4 coordinate vector of e_i cup e_j; symmetric in i, j.
    std::vector<std::vector<std::vector<std::int64_t>>> cup22;
    // pair24[i][j] = <e_i cup f_j, [M]> for the H^2 basis e and H^4 basis f.
    std::vector<std::vector<std::int64_t>> pair24;
    bool h3_has_2torsion = false;

    void validate() const;  // shape + symmetry of cup22; throws ValidationError

    std::vector<std::int64_t> cup(const std::vector<std::int64_t>& x,
                                  const std::vector<std::int64_t>& y) const;  // H2 x H2 -> H4
    std::int64_t pair(const std::vector<std::int64_t>& x,
                      const std::vector<std::int64_t>& y) const;  // H2 x H4 -> Z
};

/// Chern data of the holomorphic tangent bundle in the ring's bases.
struct FormalChernData {
    std::vector<std::int64_t> c1;  // H^2 coordinates, length b2
    std::vector<std::int64_t> c2;  // H^4 coordinates, length b4
    std::int64_t c3 = 0;           // H^6 = Z coordinate

    bool operator==(const FormalChernData&) const = default;
};

/// Chern classes of the conjugate (antiholomorphic) bundle: (-c1, c2, -c3).
FormalChernData conjugate_chern(const FormalChernData& c);

struct ComplexifiedChern {
    std::vector<std::int64_t> c1;  // identically zero
    std::vector<std::int64_t> c2;  // 2*c2 - c1 cup c1
    std::int64_t c3 = 0;           // identically zero
};

/// Whitney product of the holomorphic bundle with its conjugate. The degree-2
/// and degree-6 parts cancel; only c2 survives as 2*c2 - c1^2.
ComplexifiedChern complexified_chern(const FormalChernData& c, const CohomologyRing6& ring);

/// p1(M) vanishes iff c2 of the complexified tangent bundle does; decided
/// exactly on the free parts. The overall sign convention for p1 is
/// irrelevant here since only vanishing is consumed. Returns Unknown when
/// the ring flags 2-torsion-sensitive input it cannot see (h3_has_2torsion
/// merely gates the 6-manifold criterion downstream, not this test).
TriState p1_is_zero(const FormalChernData& c, const CohomologyRing6& ring);

/// JSON ingestion: {b2, b4, cup22, pair24, h3_has_2torsion, c1, c2, c3}.
std::pair<CohomologyRing6, FormalChernData> ring_chern_from_json(const std::string& text);

}  // namespace totreal

#endif
