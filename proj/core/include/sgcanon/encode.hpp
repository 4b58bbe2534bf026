#pragma once

#include "sgcanon/colgraph.hpp"
#include "sgcanon/sitegraph.hpp"

namespace sgcanon {

// Encodes a well-formed site graph as a rigid edge-coloured digraph:
//  - every vertex v gets a self-loop coloured with its protein name plus the
//    symmetric closure of the site pairs of same-vertex bonds at v;
//  - bonds between distinct vertices u < v are grouped per vertex pair; the
//    orientation that owns the minimum ordered site pair (over both
//    orientations' pair sets) gets one edge coloured with its pairs, and if
//    the minimum pair is symmetric both orientations get an edge.
// Throws Error when validate(s) reports any violation.
ColouredGraph encode(const SiteGraph& s);

// Inverse of encode on its image.  Checks the shape produced by encode
// (self-loop present on every vertex and protein-coloured, inter-vertex
// edge directions consistent with the minimum-pair rule), reconstructs the
// site graph, and finally re-encodes it to confirm equality.  Throws Error
// with a description of the first mismatch when g is not an encoding.
SiteGraph decode(const ColouredGraph& g);

}  // namespace sgcanon
