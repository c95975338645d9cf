#include "totreal/cohomology6.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "totreal/errors.hpp"

namespace totreal {

void CohomologyRing6::validate() const {
    if (b2 < 0 || b4 < 0) throw ValidationError("ring: negative rank");
    if (static_cast<int>(cup22.size()) != b2) throw ValidationError("ring: cup22 row count != b2");
    for (const auto& row : cup22) {
        if (static_cast<int>(row.size()) != b2)
            throw ValidationError("ring: cup22 column count != b2");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != b4)
                throw ValidationError("ring: cup22 value length != b4");
    }
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < i; ++j)
            if (cup22[i][j] != cup22[j][i])
                throw ValidationError("ring: cup product on H^2 must be symmetric");
    if (static_cast<int>(pair24.size()) != b2) throw ValidationError("ring: pair24 row count != b2");
    for (const auto& row : pair24)
        if (static_cast<int>(row.size()) != b4)
            throw ValidationError("ring: pair24 column count != b4");
}

std::vector<std::int64_t> CohomologyRing6::cup(const std::vector<std::int64_t>& x,
                                               const std::vector<std::int64_t>& y) const {
    if (static_cast<int>(x.size()) != b2 || static_cast<int>(y.size()) != b2)
        throw ValidationError("cup: H^2 coordinate length mismatch");
    std::vector<std::int64_t> out(b4, 0);
    for (int i = 0; i < b2; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < b2; ++j) {
            if (y[j] == 0) continue;
            for (int k = 0; k < b4; ++k) out[k] += x[i] * y[j] * cup22[i][j][k];
        }
    }
    return out;
}

std::int64_t CohomologyRing6::pair(const std::vector<std::int64_t>& x,
                                   const std::vector<std::int64_t>& y) const {
    if (static_cast<int>(x.size()) != b2 || static_cast<int>(y.size()) != b4)
        throw ValidationError("pair: coordinate length mismatch");
    std::int64_t out = 0;
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < b4; ++j) out += x[i] * pair24[i][j] * y[j];
    return out;
}

FormalChernData conjugate_chern(const FormalChernData& c) {
    FormalChernData out = c;
    for (auto& v : out.c1) v = -v;
    out.c3 = -c.c3;
    return out;
}

ComplexifiedChern complexified_chern(const FormalChernData& c, const CohomologyRing6& ring) {
    if (static_cast<int>(c.c1.size()) != ring.b2 || static_cast<int>(c.c2.size()) != ring.b4)
        throw ValidationError("chern data: coordinate lengths do not match ring ranks");
    ComplexifiedChern out;
    out.c1.assign(ring.b2, 0);  // c1 + (-c1)
    std::vector<std::int64_t> c1sq = ring.cup(c.c1, c.c1);
    out.c2.resize(ring.b4);
    for (int k = 0; k < ring.b4; ++k) out.c2[k] = 2 * c.c2[k] - c1sq[k];
    out.c3 = 0;  // c3 - c3 + c1 cup c2 - c2 cup c1
    return out;
}

TriState p1_is_zero(const FormalChernData& c, const CohomologyRing6& ring) {
    ComplexifiedChern cc = complexified_chern(c, ring);
    bool zero = std::all_of(cc.c2.begin(), cc.c2.end(), [](std::int64_t v) { return v == 0; });
    return tri_of(zero);
}

std::pair<CohomologyRing6, FormalChernData> ring_chern_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("ring JSON: ") + e.what());
    }
    CohomologyRing6 ring;
    FormalChernData chern;
    try {
        ring.b2 = j.at("b2").get<int>();
        ring.b4 = j.at("b4").get<int>();
        ring.cup22 = j.at("cup22").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
        ring.pair24 = j.at("pair24").get<std::vector<std::vector<std::int64_t>>>();
        ring.h3_has_2torsion = j.value("h3_has_2torsion", false);
        chern.c1 = j.at("c1").get<std::vector<std::int64_t>>();
        chern.c2 = j.at("c2").get<std::vector<std::int64_t>>();
        chern.c3 = j.at("c3").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("ring JSON: ") + e.what());
    }
    ring.validate();
    if (static_cast<int>(chern.c1.size()) != ring.b2 ||
        static_cast<int>(chern.c2.size()) != ring.b4)
        throw ValidationError("ring JSON: Chern coordinate lengths do not match ranks");
    return {ring, chern};
}

}  // namespace totreal
