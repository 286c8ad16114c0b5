#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/labeled_gem.hpp"

namespace gem {

struct DipoleSpec {
  Vertex v1 = -1;
  Vertex v2 = -1;
  ColorSet colors;

  friend bool operator==(const DipoleSpec&, const DipoleSpec&) = default;
};

// phi pairs lambda1[k] with lambda2[k].
struct GlueMoveSpec {
  std::vector<Vertex> lambda1;
  std::vector<Vertex> lambda2;
  Color color = -1;
};

// v1-v1p and v2-v2p carry colors i and j; v1-v2 and v1p-v2p carry k.
struct CombinedMoveSpec {
  Vertex v1 = -1, v2 = -1;
  Vertex v1p = -1, v2p = -1;
  Color i = -1, j = -1;
  Color k = -1;
};

// Surviving vertices keep their relative order; old_to_new[v] = -1 for deleted v.
struct MoveResult {
  ColoredGraph graph;
  std::vector<Vertex> old_to_new;
};

std::vector<DipoleSpec> find_dipoles(const ColoredGraph& g, int h);

// Throws NotADipole naming the violated condition; silent otherwise.
void check_dipole(const ColoredGraph& g, const DipoleSpec& d);

MoveResult cancel_dipole(const ColoredGraph& g, const DipoleSpec& d);

// The two new vertices are appended (ids V and V+1) and form a dipole on `colors`;
// at_vertex becomes joined to the first of them by every other color.
MoveResult add_dipole(const ColoredGraph& g, Vertex at_vertex, ColorSet colors);

// Checks the combinatorial hypotheses only; that the induced subgraphs represent
// balls is the caller's obligation.
MoveResult polyhedral_glue(const ColoredGraph& g, const GlueMoveSpec& m);

MoveResult combined_move(const ColoredGraph& g, const CombinedMoveSpec& m);

// Scripts: steps name vertices by label.
struct DipoleStep {
  std::string v1, v2;
  ColorSet colors;
};
struct GlueStep {
  Color color = -1;
  std::vector<std::string> lambda1, lambda2;
};
struct CombinedStep {
  Color k = -1, i = -1, j = -1;
  std::string v1, v2, v1p, v2p;
};
struct ScriptStep {
  std::variant<DipoleStep, GlueStep, CombinedStep> move;
  int line = 0;
};
using MoveScript = std::vector<ScriptStep>;

// Grammar, one move per line, '#' comments:
//   dipole v1 v2 c1,c2,...
//   glue i [u1,u2,...] -> [w1,w2,...]
//   combined k {i,j} (v1,v2) (v1p,v2p)
MoveScript parse_move_script(std::string_view text);
std::string render_move_script(const MoveScript& script);

struct ScriptResult {
  LabeledGem gem;
  std::vector<int> trace;  // vertex counts, starting with the input
};
// Step errors are rethrown with the step index and script line in the message.
ScriptResult run_script(const LabeledGem& g, const MoveScript& script);

// Applies a result to a label table.
LabeledGem relabel_after(const LabeledGem& before, const MoveResult& r);

}  // namespace gem
