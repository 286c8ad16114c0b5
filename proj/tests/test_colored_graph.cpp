#include <gtest/gtest.h>

#include "gem/colored_graph.hpp"
#include "gem/errors.hpp"
#include "gem/labeled_gem.hpp"
#include "support/catalogue.hpp"

using namespace gem;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(ColorSet, BasicOperations) {
  ColorSet s{0, 2};
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.complement(4), (ColorSet{1, 3}));
  EXPECT_EQ(s.with(1).without(0), (ColorSet{1, 2}));
  EXPECT_EQ(ColorSet::all(3).colors(), (std::vector<Color>{0, 1, 2}));
}

TEST(ColoredGraph, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { ColoredGraph::from_pairs(2, 2, {{{0, 0}}, {{0, 1}}}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { ColoredGraph::from_pairs(2, 4, {{{0, 1}, {1, 2}}, {{0, 1}, {2, 3}}}); }),
            ErrorKind::DuplicateVertexInColor);
  EXPECT_EQ(kind_of([] { ColoredGraph::from_pairs(2, 4, {{{0, 1}}, {{0, 1}, {2, 3}}}); }), ErrorKind::VertexCountMismatch);
  EXPECT_EQ(kind_of([] { ColoredGraph::from_pairs(2, 3, {{{0, 1}}, {{0, 1}}}); }), ErrorKind::OddVertexCount);
  EXPECT_EQ(kind_of([] { ColoredGraph::from_pairs(2, 2, {{{0, 5}}, {{0, 1}}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { ColoredGraph::from_involutions({{1, 0}, {0, 1}}); }), ErrorKind::LoopEdge);
}

TEST(ColoredGraph, OrderTwoGem) {
  auto g = testkit::order_two(5);
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.dimension(), 4);
  EXPECT_EQ(g.joining(0, 1), ColorSet::all(5));
  EXPECT_TRUE(is_contracted(g).contracted);
  EXPECT_TRUE(is_bipartite(g));
  // the two-vertex gem of S^4: N_k = C(5, k+1) for k < 4, two 4-simplices
  EXPECT_EQ(face_counts(g), (std::vector<long long>{5, 10, 10, 5, 2}));
}

TEST(ColoredGraph, ComponentsOrderedBySmallestVertex) {
  auto g = ColoredGraph::from_pairs(2, 4, {{{0, 3}, {1, 2}}, {{0, 1}, {2, 3}}});
  auto lab = restrict(g, ColorSet{0});
  EXPECT_EQ(lab.count, 2);
  EXPECT_EQ(lab.id, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(component_count(g, ColorSet{0, 1}), 1);
  EXPECT_EQ(component_count(g, ColorSet{}), 4);
}

TEST(ColoredGraph, RelabelAndPermuteColors) {
  auto g = ColoredGraph::from_pairs(3, 4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});
  std::vector<Vertex> id{3, 2, 1, 0};
  auto h = relabel_vertices(g, id);
  for (Color c = 0; c < 3; ++c)
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(h.neighbor(c, id[v]), id[g.neighbor(c, v)]);
  std::vector<Color> sigma{2, 0, 1};
  auto p = permute_colors(g, sigma);
  for (Color c = 0; c < 3; ++c)
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(p.neighbor(sigma[c], v), g.neighbor(c, v));
}

TEST(ColoredGraph, BipartiteDetection) {
  // triangle-free but odd: a 6-cycle is bipartite, adding a chord of odd length is not
  auto even = ColoredGraph::from_pairs(2, 4, {{{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}});
  EXPECT_TRUE(is_bipartite(even));
  auto odd = ColoredGraph::from_pairs(3, 4, {{{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}, {{0, 2}, {1, 3}}});
  EXPECT_FALSE(is_bipartite(odd));
}

TEST(LabeledGem, LabelValidation) {
  auto g = testkit::order_two(3);
  EXPECT_EQ(kind_of([&] { LabeledGem(g, {"a", "a"}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([&] { LabeledGem(g, {"a"}); }), ErrorKind::VertexCountMismatch);
  LabeledGem l(g, {"x", "y"});
  EXPECT_EQ(l.at("y"), 1);
  EXPECT_EQ(l.find("z"), -1);
  EXPECT_EQ(kind_of([&] { l.at("z"); }), ErrorKind::UnknownLabel);
}
