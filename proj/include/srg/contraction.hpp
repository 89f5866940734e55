#pragma once

#include "srg/parallel.hpp"
#include "srg/ribbon.hpp"

#include <optional>

namespace srg {

enum class ContractionCase {
  non_loop,          // edge between two vertices
  loop_two_cycles,   // loop joining distinct cycles of one vertex
  loop_one_cycle,    // loop with both ends in one cycle
};

struct ContractionOutcome {
  ContractionCase kind{};
  /// Empty when the edge cannot be contracted.
  std::optional<StableRibbonGraph> graph;
  int sign = 1;

  bool contractible() const { return graph.has_value(); }
};

/// Contracts edge e (its position in the orientation order). The input is not modified.
/// Throws std::out_of_range if e is not an edge.
ContractionOutcome contract_edge(const StableRibbonGraph& g, int e);

/// Sum over edges of sign * (g / e).
GraphChain boundary(const StableRibbonGraph& g);
GraphChain boundary(const GraphChain& c, Execution ex = Execution::serial);

enum class ComplexKind { srgc, krgc, rgc };

const char* to_string(ComplexKind k);
ComplexKind parse_complex(std::string_view s);

bool in_complex(const StableRibbonGraph& g, ComplexKind k);
/// Keeps only terms that are generators of the given complex.
GraphChain project(const GraphChain& c, ComplexKind k);
inline GraphChain project_krgc(const GraphChain& c) { return project(c, ComplexKind::krgc); }
inline GraphChain project_rgc(const GraphChain& c) { return project(c, ComplexKind::rgc); }

/// The differential of the given complex: boundary followed by projection.
GraphChain differential(const GraphChain& c, ComplexKind k, Execution ex = Execution::serial);

}  // namespace srg
