#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "goursat/codeword.hpp"
#include "goursat/numeric.hpp"

namespace goursat {

// Vertices 0..k; vertex 0 is the unlabeled base point. Edges are (i, j)
// with i < j and include the chain edges (i, i + 1).
struct ProximityDiagram {
  std::size_t k = 0;
  std::vector<Symbol> labels;  // labels[i - 1] is the symbol at vertex i
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
  IntVec mult;                                             // m_0..m_k

  Symbol label(std::size_t vertex) const { return labels.at(vertex - 1); }
  const Integer& m(std::size_t vertex) const { return mult.at(vertex); }
};

ProximityDiagram build_diagram(const GoursatWord& word);

// (m_{k-1}, ..., m_1). Empty for k = 1.
IntVec multiplicity_vector(const ProximityDiagram& d);

// der(w) = der(lift(w)) followed by m_1(w), starting from der(R) = (1).
IntVec derived_frontend(const GoursatWord& word);

// Undirected graph, left to right, node labels "i:SYMBOL:m".
std::string to_dot(const ProximityDiagram& d);
std::string to_ascii(const ProximityDiagram& d);

}  // namespace goursat
