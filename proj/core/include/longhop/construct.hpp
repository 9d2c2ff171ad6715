#pragma once

// Translation between binary linear codes and Cayley topologies.
//
// A k x n generator matrix G becomes a topology with d = k and m = n whose
// hop h_s is column s of G, row 0 at bit 2^0. The normalized bisection of
// the topology equals the minimum distance of the code.

#include "longhop/codes.hpp"
#include "longhop/topology.hpp"

namespace longhop {

/// Throws InputError when k exceeds kMaxDimension or when a column is zero
/// or repeated (self-loop or multi-edge).
CayleyTopology code_to_network(const GeneratorMatrix& g);

/// Hops become columns in port order, so code_to_network(network_to_code(t)) == t.
GeneratorMatrix network_to_code(const CayleyTopology& t);

/// Isomorphic hop set containing the basis 2^0..2^(d-1), via column
/// diagonalization of the m x d hop matrix. Hop order is preserved.
HopSet normalize_basis(const HopSet& h);

}  // namespace longhop
