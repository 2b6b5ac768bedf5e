#pragma once

#include <string>
#include <vector>

#include "assortnet/graph.hpp"

namespace fixtures {

using assortnet::GenderLabel;
using assortnet::LabeledEdge;

inline LabeledEdge edge(std::string src, std::string dst, char src_label,
                        char dst_label) {
  LabeledEdge e;
  e.src = std::move(src);
  e.dst = std::move(dst);
  e.src_label =
      src_label == '+' ? GenderLabel::Positive : GenderLabel::Negative;
  e.dst_label =
      dst_label == '+' ? GenderLabel::Positive : GenderLabel::Negative;
  return e;
}

// Two single-label triangles joined by one cross edge. Strongly assortative:
// alpha = 7/9, unit-weight r = 5/7, inverse-degree r = 7/9.
inline std::vector<LabeledEdge> assortative_six() {
  return {
      edge("a", "b", '+', '+'), edge("b", "c", '+', '+'),
      edge("a", "c", '+', '+'), edge("x", "y", '-', '-'),
      edge("y", "z", '-', '-'), edge("x", "z", '-', '-'),
      edge("a", "x", '+', '-'),
  };
}

// Three cross pairs plus one edge inside each label class. Disassortative:
// alpha = -1/3, unit-weight r = -1/5, inverse-degree r = -1/3.
inline std::vector<LabeledEdge> disassortative_six() {
  return {
      edge("a", "x", '+', '-'), edge("b", "y", '+', '-'),
      edge("c", "z", '+', '-'), edge("a", "c", '+', '+'),
      edge("x", "y", '-', '-'),
  };
}

// A reciprocated graph that is not a union of cliques and has a cross edge
// joining nodes of unequal degree. On it the inverse-degree weighting does
// not reproduce alpha, so certification must honestly fail.
inline std::vector<LabeledEdge> uncertifiable_three() {
  return {
      edge("u", "v", '+', '-'),
      edge("u", "w", '+', '+'),
  };
}

inline std::string edges_csv(const std::vector<LabeledEdge>& edges) {
  std::string out = "src,dst,label_src,label_dst\n";
  for (const LabeledEdge& e : edges) {
    out += e.src + "," + e.dst + ",";
    out += assortnet::label_symbol(e.src_label);
    out += ",";
    out += assortnet::label_symbol(e.dst_label);
    out += "\n";
  }
  return out;
}

}  // namespace fixtures
