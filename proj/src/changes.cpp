#include "somnus/changes.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace somnus {

void apply_event(Graph& g, const ChangeEvent& e) {
    switch (e.kind) {
        case ChangeEvent::Kind::AddVertex:
            g.add_vertex(e.u);
            break;
        case ChangeEvent::Kind::RemoveVertex:
            g.remove_vertex(e.u);
            break;
        case ChangeEvent::Kind::AddEdge:
            g.add_edge(e.u, e.v);
            break;
        case ChangeEvent::Kind::RemoveEdge:
            g.remove_edge(e.u, e.v);
            break;
    }
}

void write_batch(const ChangeBatch& b, std::ostream& out) {
    for (const ChangeEvent& e : b.events) {
        switch (e.kind) {
            case ChangeEvent::Kind::AddVertex: out << "+v " << e.u << "\n"; break;
            case ChangeEvent::Kind::RemoveVertex: out << "-v " << e.u << "\n"; break;
            case ChangeEvent::Kind::AddEdge: out << "+e " << e.u << " " << e.v << "\n"; break;
            case ChangeEvent::Kind::RemoveEdge: out << "-e " << e.u << " " << e.v << "\n"; break;
        }
    }
}

ChangeBatch read_batch(std::istream& in, std::int64_t t) {
    ChangeBatch batch;
    batch.t = t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        VertexId a = 0, b = 0;
        if (tag == "+v" || tag == "-v") {
            if (!(ls >> a)) throw Error("batch: malformed line: " + line);
            batch.events.push_back(tag == "+v" ? ChangeEvent::add_vertex(a)
                                               : ChangeEvent::remove_vertex(a));
        } else if (tag == "+e" || tag == "-e") {
            if (!(ls >> a >> b)) throw Error("batch: malformed line: " + line);
            batch.events.push_back(tag == "+e" ? ChangeEvent::add_edge(a, b)
                                               : ChangeEvent::remove_edge(a, b));
        } else {
            throw Error("batch: unknown event tag: " + tag);
        }
    }
    if (static_cast<std::int64_t>(batch.events.size()) > t)
        throw Error("batch: more events than the batch parameter t");
    return batch;
}

}  // namespace somnus
