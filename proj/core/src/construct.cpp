#include "longhop/construct.hpp"

#include "longhop/error.hpp"

namespace longhop {

CayleyTopology code_to_network(const GeneratorMatrix& g) {
    if (g.rows() > kMaxDimension) {
        throw InputError("code_to_network: k=" + std::to_string(g.rows()) +
                         " exceeds the maximum dimension 32");
    }
    std::vector<Word> hops;
    hops.reserve(g.cols());
    for (std::size_t s = 0; s < g.cols(); ++s) hops.push_back(g.column(s));
    return build(static_cast<unsigned>(g.rows()), std::move(hops));
}

GeneratorMatrix network_to_code(const CayleyTopology& t) {
    const unsigned d = t.dimension();
    std::vector<BitVector> rows(d, BitVector(t.degree()));
    for (std::size_t s = 0; s < t.degree(); ++s) {
        const Word h = t.hops()[s];
        for (unsigned i = 0; i < d; ++i) rows[i].set(s, (h >> i) & 1U);
    }
    return GeneratorMatrix(std::move(rows));
}

HopSet normalize_basis(const HopSet& h) {
    auto result = column_diagonalize(h.hops(), h.dimension());
    if (!result.success) {
        throw InputError("normalize_basis: hop set does not span Z_2^" +
                         std::to_string(h.dimension()));
    }
    return HopSet(h.dimension(), std::move(result.rows));
}

}  // namespace longhop
