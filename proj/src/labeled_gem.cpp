#include "gem/labeled_gem.hpp"

#include "gem/errors.hpp"

namespace gem {

std::vector<std::string> default_labels(int num_vertices) {
  std::vector<std::string> out;
  out.reserve(num_vertices);
  for (int v = 0; v < num_vertices; ++v) out.push_back(std::to_string(v));
  return out;
}

LabeledGem::LabeledGem(ColoredGraph graph, std::vector<std::string> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != graph_.num_vertices())
    throw Error(ErrorKind::VertexCountMismatch, std::to_string(labels_.size()) + " labels for " +
                                                    std::to_string(graph_.num_vertices()) + " vertices");
  index_.reserve(labels_.size());
  for (Vertex v = 0; v < static_cast<Vertex>(labels_.size()); ++v) {
    if (labels_[v].empty()) throw Error(ErrorKind::UnknownLabel, "empty label for vertex " + std::to_string(v));
    if (!index_.emplace(labels_[v], v).second) throw Error(ErrorKind::DuplicateLabel, "label '" + labels_[v] + "'");
  }
}

LabeledGem::LabeledGem(ColoredGraph graph) : LabeledGem(graph, default_labels(graph.num_vertices())) {}

Vertex LabeledGem::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

Vertex LabeledGem::at(std::string_view label) const {
  Vertex v = find(label);
  if (v < 0) throw Error(ErrorKind::UnknownLabel, "no vertex labeled '" + std::string(label) + "'");
  return v;
}

}  // namespace gem
