#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// A graph with a bijective vertex <-> label table ("v7^{B'}", "T_{134}^2", ...).
class LabeledGem {
 public:
  LabeledGem(ColoredGraph graph, std::vector<std::string> labels);
  // Labels default to the decimal vertex ids.
  explicit LabeledGem(ColoredGraph graph);

  const ColoredGraph& graph() const { return graph_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  int num_vertices() const { return graph_.num_vertices(); }

  // -1 when absent.
  Vertex find(std::string_view label) const;
  // Throws UnknownLabel when absent.
  Vertex at(std::string_view label) const;

 private:
  ColoredGraph graph_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
};

std::vector<std::string> default_labels(int num_vertices);

}  // namespace gem
