#pragma once

// Brute-force reference implementations. They only use edge lists, sizes
// and plain integers so that they share no code paths with the library.

#include "bsgkit/hypergraph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<std::uint32_t>;
using Edges = std::set<Tuple>;
using Sizes = std::vector<std::uint32_t>;

Edges edge_set(const bsg::PartiteHypergraph& h);

/// Every tuple of the product of `sizes`, lexicographic.
std::vector<Tuple> all_tuples(const Sizes& sizes);

/// Tuples u over the parts other than `part` with u+v and u+w both edges.
std::uint64_t leg_count(const Edges& e, const Sizes& sizes, std::size_t part, std::uint32_t v, std::uint32_t w);

/// Sum over closing edges with w_i != v_i of the product of leg counts.
bsg::BigInt relaxed(const Edges& e, const Sizes& sizes, const Tuple& support);

/// Octopuses by explicit recursion over mates and leg edges. `full` also
/// keeps leg fills off v_r.
std::uint64_t exact(const Edges& e, const Sizes& sizes, const Tuple& support, bool full);

/// Ordered quadruples in A^4 with x + y = x' + y', modulus 0 meaning Z.
std::uint64_t energy(const std::vector<long long>& a, long long modulus = 0);

/// Tuples (c_1..c_{2r-1}) in S^{2r-1} with c_1+..+c_{r-1} - (c_r+..+c_{2r-2}) + c_{2r-1} = target in Z_m.
std::uint64_t representations(const std::vector<long long>& s, long long modulus, unsigned r, long long target);

/// m[v][w] = number of edges through v in `part` whose other coordinates
/// also form an edge with w; the diagonal is the degree. Built from sorted
/// remainder lists, independent of the leg enumeration above.
using Matrix = std::vector<std::vector<std::uint64_t>>;
Matrix codegree_matrix(const Edges& e, const Sizes& sizes, std::size_t part);

/// Sum-of-products relaxed count from precomputed codegree matrices (one per
/// part below r-1).
bsg::BigInt relaxed_from(const Edges& e, const std::vector<Matrix>& codeg, const Tuple& support);

/// Histogram over Z_m of the signed sums counted by representations().
std::vector<std::uint64_t> representation_histogram(const std::vector<long long>& s, long long modulus, unsigned r);

}  // namespace oracle
