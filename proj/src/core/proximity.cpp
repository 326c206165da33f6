#include "goursat/proximity.hpp"

#include <algorithm>
#include <sstream>

namespace goursat {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

IntVec multiplicities(std::size_t k, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> out(k + 1);
  for (const auto& [i, j] : edges) out[i].push_back(j);
  IntVec m(k + 1, Integer(0));
  m[k] = 1;
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t j : out[i]) m[i] += m[j];
  return m;
}

// The lift chain w, lift(w), ..., R reversed so that it starts at R.
std::vector<GoursatWord> lift_chain(const GoursatWord& word) {
  std::vector<GoursatWord> chain{word};
  while (chain.back().length() > 1) chain.push_back(lift(chain.back()));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// One front-end step: the diagram of `word` from the edges of lift(word).
std::vector<Edge> step_edges(const GoursatWord& word, const std::vector<Edge>& lifted) {
  std::vector<Edge> edges;
  edges.reserve(lifted.size() + 4);
  edges.emplace_back(0, 1);
  for (const auto& [i, j] : lifted) edges.emplace_back(i + 1, j + 1);
  const std::size_t k = word.length();
  if (k >= 3 && word.at(3) == Symbol::V) {
    edges.emplace_back(1, 3);
    for (std::size_t v = 4; v <= k && word.at(v) == Symbol::T; ++v) edges.emplace_back(1, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

ProximityDiagram build_diagram(const GoursatWord& word) {
  const auto chain = lift_chain(word);
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t s = 1; s < chain.size(); ++s) edges = step_edges(chain[s], edges);

  ProximityDiagram d;
  d.k = word.length();
  d.labels.assign(word.word().symbols().begin(), word.word().symbols().end());
  d.edges = std::move(edges);
  d.mult = multiplicities(d.k, d.edges);
  return d;
}

IntVec multiplicity_vector(const ProximityDiagram& d) {
  IntVec out;
  for (std::size_t i = d.k; i-- > 1;) out.push_back(d.mult[i]);
  return out;
}

IntVec derived_frontend(const GoursatWord& word) {
  const auto chain = lift_chain(word);
  IntVec der{Integer(1)};
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t s = 1; s < chain.size(); ++s) {
    edges = step_edges(chain[s], edges);
    der.push_back(multiplicities(chain[s].length(), edges)[1]);
  }
  return der;
}

namespace {

std::string node_label(const ProximityDiagram& d, std::size_t v) {
  std::string sym = v == 0 ? "-" : std::string(1, static_cast<char>(d.label(v)));
  return std::to_string(v) + ":" + sym + ":" + d.mult[v].get_str();
}

}  // namespace

std::string to_dot(const ProximityDiagram& d) {
  std::ostringstream out;
  out << "graph proximity {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v <= d.k; ++v)
    out << "  v" << v << " [label=\"" << node_label(d, v) << "\"];\n";
  for (const auto& [i, j] : d.edges) {
    out << "  v" << i << " -- v" << j;
    if (j != i + 1) out << " [style=curved, constraint=false, label=\"prox\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_ascii(const ProximityDiagram& d) {
  std::ostringstream out;
  for (std::size_t v = 0; v <= d.k; ++v) {
    if (v) out << " -- ";
    out << "[" << node_label(d, v) << "]";
  }
  out << "\n";
  for (const auto& [i, j] : d.edges)
    if (j != i + 1) out << "  " << i << " ~ " << j << "\n";
  return out.str();
}

}  // namespace goursat
