#pragma once

#include "symedge/graph.hpp"

namespace symedge::fixtures {

/// 7-vertex test graph: the 6-cycle x1..x6 plus x7 adjacent to x2, x3, x5
/// and x6. Perfect, clique number 3, not cochordal.
inline Graph wheel_like_7() {
    return Graph::from_edges(7, {{1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {4, 5},
                                 {5, 6},
                                 {1, 6},
                                 {2, 7},
                                 {3, 7},
                                 {5, 7},
                                 {6, 7}});
}

/// 25-vertex block graph, hand-transcribed from a drawing (labels were
/// assigned to the drawn coordinates, so the edge list is transcription-
/// derived): a K5 with a triangle, a K4, a pendant vertex and two trees of
/// cliques hanging off it.
inline Graph block_figure_25() {
    return Graph::from_edges(
        25,
        {// K5 on 1..5
         {1, 2},
         {2, 3},
         {3, 4},
         {4, 5},
         {1, 3},
         {1, 4},
         {1, 5},
         {2, 4},
         {2, 5},
         {3, 5},
         // triangle at 2
         {2, 6},
         {6, 7},
         {2, 7},
         // K4 at 4
         {4, 8},
         {8, 9},
         {9, 10},
         {4, 10},
         {8, 10},
         {4, 9},
         // pendant at 1
         {1, 11},
         // path of edges from 3
         {3, 12},
         {12, 13},
         {13, 14},
         {13, 15},
         // triangle at 15
         {15, 16},
         {16, 17},
         {15, 17},
         // second branch from 3
         {3, 18},
         {18, 19},
         // K4 at 19
         {19, 20},
         {20, 21},
         {21, 22},
         {19, 22},
         {20, 22},
         {19, 21},
         // cherry at 18
         {18, 23},
         {23, 24},
         {23, 25}});
}

/// 9-vertex chordal graph, hand-transcribed from a drawing: two triangles
/// glued on an edge, an edge to a triangle, and two pendants. Its
/// complement is cochordal with every vertex in at most two maximal
/// independent sets, while the graph itself is neither a block graph nor a
/// proper interval graph.
inline Graph condition_c_figure_9() {
    return Graph::from_edges(9, {{1, 2},
                                 {2, 4},
                                 {4, 5},
                                 {5, 6},
                                 {6, 7},
                                 {5, 7},
                                 {1, 3},
                                 {3, 4},
                                 {6, 8},
                                 {7, 9},
                                 {2, 3}});
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(1, n);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

/// K_{1,3}: center 1.
inline Graph claw() { return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}); }

}  // namespace symedge::fixtures
