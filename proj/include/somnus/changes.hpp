#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "somnus/graph.hpp"

namespace somnus {

struct ChangeEvent {
    enum class Kind { AddVertex, RemoveVertex, AddEdge, RemoveEdge };

    Kind kind = Kind::AddVertex;
    VertexId u = 0;
    VertexId v = 0;  // unused for vertex events

    static ChangeEvent add_vertex(VertexId id) { return {Kind::AddVertex, id, 0}; }
    static ChangeEvent remove_vertex(VertexId id) { return {Kind::RemoveVertex, id, 0}; }
    static ChangeEvent add_edge(VertexId a, VertexId b) { return {Kind::AddEdge, a, b}; }
    static ChangeEvent remove_edge(VertexId a, VertexId b) { return {Kind::RemoveEdge, a, b}; }
};

// Ordered batch of at most t events applied between update executions.
struct ChangeBatch {
    std::vector<ChangeEvent> events;
    std::int64_t t = 1;
};

// Applies one event; throws Error if it is not applicable.
void apply_event(Graph& g, const ChangeEvent& e);

// One event per line: "+v id", "-v id", "+e u v", "-e u v".
void write_batch(const ChangeBatch& b, std::ostream& out);
ChangeBatch read_batch(std::istream& in, std::int64_t t);

}  // namespace somnus
