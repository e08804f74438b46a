#ifndef TTONE_EMBEDDING_HPP
#define TTONE_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

/// Outerplane embedding of a simple connected graph: per nontrivial
/// biconnected block the Hamiltonian outer cycle plus its chord set, the
/// bridge edges, and the weak dual over bounded faces.
struct OuterEmbedding {
    struct Block {
        std::vector<int> outer_cycle; // vertices in cyclic order
        std::vector<int> chords;      // edge ids inside this block
    };
    struct Face {
        int block;              // index into blocks
        std::vector<int> cycle; // bounding cycle C(F), cyclic vertex order
    };

    std::vector<Block> blocks;
    std::vector<int> bridge_edges;
    std::vector<Face> faces;
    std::vector<std::vector<int>> dual_adj; // weak dual adjacency, face index -> face indices
};

struct OuterEmbeddingResult {
    std::optional<OuterEmbedding> embedding; // set iff outerplanar
    bool conclusive = true;                  // false when the search budget ran out
};

/// Attempts an outerplane embedding. Requires a simple connected graph;
/// parallel edges are rejected. A nonpositive budget means unlimited search.
OuterEmbeddingResult outer_embedding(const Multigraph& g, long budget = 500000);

/// A pendant face: a weak-dual leaf whose cycle carries exactly one degree-3
/// vertex, or exactly two consecutive ones. The cycle comes rotated so v1 is
/// the degree-3 vertex (v1 and v_l when there are two).
struct PendantFace {
    int face;               // index into emb.faces
    std::vector<int> cycle; // rotated C(F)
};

std::optional<PendantFace> find_pendant_face(const Multigraph& g, const OuterEmbedding& emb);

} // namespace ttone

#endif
