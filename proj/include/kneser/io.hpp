#pragma once
// On-disk graph formats: the edge-list format with its parameter header, the
// DOT rendering with subset labels, and the edge-list loader used to feed
// external graphs into the distance-d transform. Output is byte-identical
// across runs for identical inputs.

#include <iosfwd>
#include <string>

#include "kneser/graphcore.hpp"

namespace kneser {

// Header line `# family=<tag> n=<n> k=<k> [r=..] [d=..] [i=..] vertices=<V>`,
// then one `u v` line per edge with u < v, ordered by (u, v).
void write_edgelist(std::ostream& out, const Graph& g);

// Undirected DOT graph; subset-structured vertices are labeled with their
// element sets, external vertices with their rank.
void write_dot(std::ostream& out, const Graph& g);

// Reads the edge-list format back. The `vertices=` header token fixes the
// vertex count; without a header the count is the largest endpoint plus one.
Graph load_edgelist(std::istream& in);

std::string subset_label(std::uint64_t bits);

}  // namespace kneser
