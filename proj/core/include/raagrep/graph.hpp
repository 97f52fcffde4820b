#pragma once

#include "raagrep/rational.hpp"

#include <set>
#include <utility>
#include <vector>

namespace raagrep {

/// Finite simple graph: no loops, no duplicate edges.
class SimpleGraph {
  public:
    explicit SimpleGraph(int vertex_count);

    void add_edge(int v, int w);
    bool adjacent(int v, int w) const;

    int vertex_count() const { return n_; }
    /// Normalized (v < w) pairs in sorted order.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const { return edges_.size(); }

    bool is_triangle_free() const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

/// Cycle on n >= 3 vertices, edges {i, i+1 mod n}.
SimpleGraph cycle_graph(int n);

/// Genus of the surface group contained in the Artin group on an n-cycle,
/// n >= 5: g = 1 + (n-4) * 2^(n-3).
Integer cycle_surface_genus(int n);

} // namespace raagrep
