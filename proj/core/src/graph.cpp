#include "raagrep/graph.hpp"

#include "raagrep/errors.hpp"

namespace raagrep {

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count <= 0) throw TooSmall("graph must have at least one vertex");
}

void SimpleGraph::add_edge(int v, int w) {
    if (v < 0 || w < 0 || v >= n_ || w >= n_) throw Error("add_edge: vertex out of range");
    if (v == w) throw Error("add_edge: loops are not allowed");
    edges_.insert({std::min(v, w), std::max(v, w)});
}

bool SimpleGraph::adjacent(int v, int w) const {
    if (v == w) return false;
    return edges_.count({std::min(v, w), std::max(v, w)}) > 0;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    return {edges_.begin(), edges_.end()};
}

bool SimpleGraph::is_triangle_free() const {
    for (const auto& [v, w] : edges_)
        for (int x = 0; x < n_; ++x)
            if (x != v && x != w && adjacent(v, x) && adjacent(w, x)) return false;
    return true;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw TooSmall("cycle_graph: need n >= 3");
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Integer cycle_surface_genus(int n) {
    if (n < 5) throw TooSmall("cycle_surface_genus: need n >= 5");
    return 1 + Integer(n - 4) * (Integer(1) << (n - 3));
}

} // namespace raagrep
