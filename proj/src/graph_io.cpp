#include "somnus/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace somnus {

void write_graph(const Graph& g, std::ostream& out) {
    std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
    if (g.max_vertex_id() != n)
        throw Error("write_graph: vertex ids must be exactly 1..n");
    out << n << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

Graph read_graph(std::istream& in) {
    std::int64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw Error("read_graph: malformed header");
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (std::int64_t i = 0; i < m; ++i) {
        VertexId u = 0, v = 0;
        if (!(in >> u >> v)) throw Error("read_graph: truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    write_graph(g, out);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open for reading: " + path);
    return read_graph(in);
}

}  // namespace somnus
