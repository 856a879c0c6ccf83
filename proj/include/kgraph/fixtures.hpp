#ifndef KGRAPH_FIXTURES_HPP
#define KGRAPH_FIXTURES_HPP

#include <kgraph/skeleton.hpp>

#include <cstdint>
#include <string>

namespace kgraph {

// Built-in skeleton families. Acceptance checks run against these, so no
// external data files are needed.

// Four vertices 00, 01, 10, 11; color-1 edges lam, al0..al<m>; color-2
// edges be, mu0..mu<m>; squares encode be.al_i = lam.mu_i. The truncation
// parameter m gives m+1 parallel al/mu edges, so the generator pair
// (lam, be) has exactly m+1 minimal common extensions and the family's
// MCE count grows without bound as m does.
SkeletonDoc fixture_ex43(int m);

// k = 1, one vertex v, `loops` loops a, b, c, ...; no squares.
SkeletonDoc fixture_loops(int loops = 2);

// One vertex, k colors, n loops per color (a1.., b1.., ...), squares the
// plain flips x_i y_j = y_j x_i.
SkeletonDoc fixture_free(int n = 2, int k = 2);

// One vertex, three colors, n loops per color, squares the index
// exchange x_i y_j = y_i x_j (relabeled per color by seeded
// permutations). The exchange squares are the unique hexagon-compatible
// completion of their own two-color restrictions, so every single-square
// perturbation of this family fails check_associativity.
SkeletonDoc fixture_exchange3(int n = 2, std::uint64_t seed = 0);

// Random 2-colored skeleton on a cyclic vertex set with circulant edge
// counts; circulant count matrices commute, which makes the per-endpoint
// composable-pair classes equinumerous, and the squares are seeded random
// bijections class by class. At most 20 edges per color.
SkeletonDoc fixture_random2(std::uint64_t seed, int size_hint = 2);

// Dispatch by fixture name: ex43 | loops | free2 | exchange3 | random.
// `m` is the family parameter (truncation, loop count, or size hint).
SkeletonDoc make_fixture(const std::string& name, int m, std::uint64_t seed);

// Swaps the right sides of squares i and j (same color pair and matching
// endpoint classes required to keep the result buildable). Used to
// exercise the associativity checker.
SkeletonDoc transpose_square_rights(SkeletonDoc doc, std::size_t i, std::size_t j);

}  // namespace kgraph

#endif
