#pragma once

// The quiver Q^{n,m}: vertices V_{n,m}, arrows x -> sigma_k^+(x), and the
// commutativity / zero-composite relations presenting the algebra the
// representation layer works over.

#include "widecat/tuples.hpp"

#include <string>
#include <vector>

namespace widecat {

struct Arrow {
    int src = 0;   // vertex indices into QuiverPresentation::vertices
    int dst = 0;
    int coord = 0; // the shifted coordinate k

    bool operator==(const Arrow&) const = default;
};

enum class RelationKind { commutativity, zero_composite };

// rho^x_{kl}, stored structurally: the base vertex, the coordinate pair and
// which of the two length-2 paths exist.
struct Relation {
    int base = 0; // vertex index of x
    int k = 0;
    int l = 0;    // k < l
    RelationKind kind = RelationKind::commutativity;

    bool operator==(const Relation&) const = default;
};

struct QuiverPresentation {
    TupleSpace space;
    std::vector<IncTuple> vertices; // lexicographic
    std::vector<Arrow> arrows;      // sorted by (src, coord)
    std::vector<Relation> relations;

    int vertex_index(const IncTuple& v) const; // -1 when absent

    bool operator==(const QuiverPresentation&) const = default;
};

QuiverPresentation build_quiver(TupleSpace space);

// DOT digraph; node ids are the concatenated entries, byte-deterministic.
std::string to_dot(const QuiverPresentation& q);

std::string to_json(const QuiverPresentation& q);
QuiverPresentation quiver_from_json(const std::string& text);

} // namespace widecat
