#pragma once

#include <string>
#include <string_view>

#include "gem/labeled_gem.hpp"

namespace gem {

// Line-oriented gem text, '#' comments:
//   gem 1
//   colors <k>
//   vertices <V>
//   label <id> <string>      optional, repeatable
//   c <i>: a-b a-b ...       one line per color
// Syntax errors throw ParseError; graph violations throw the gem_core error kind.
// Both carry the offending line and column.
LabeledGem parse_gem(std::string_view text);

// Canonical text: colors ascending, pairs sorted by smaller endpoint. Label lines
// are written only when some label differs from the vertex id.
std::string render_gem(const LabeledGem& g);

std::string export_dot(const LabeledGem& g);

// Tab-separated facet-gluing table: header row, then one row per simplex
// (= gem vertex) giving its partner across the facet opposite each color.
std::string export_gluings(const LabeledGem& g);

}  // namespace gem
