#pragma once

// Stable ribbon graphs: half-edges 0..2E-1 paired into edges, grouped into
// cyclically ordered cycles, cycles grouped into vertices that carry genus
// and boundary defects. The edge list order is the orientation.

#include "srg/combination.hpp"
#include "srg/parallel.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srg {

using Cycle = std::vector<int>;

struct Vertex {
  std::vector<Cycle> cycles;
  int genus = 0;     // g(v)
  int boundary = 0;  // n(v)

  int valency() const;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct StableRibbonGraph {
  /// Edge k joins half-edges edges[k][0] and edges[k][1]; list order is the orientation.
  std::vector<std::array<int, 2>> edges;
  std::vector<Vertex> vertices;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int half_edge_count() const { return 2 * edge_count(); }
  int cycle_count() const;

  friend bool operator==(const StableRibbonGraph&, const StableRibbonGraph&) = default;
};

/// Permutation tables on half-edges.
struct HalfEdgeTables {
  std::vector<int> sigma0;  // next half-edge in its cycle
  std::vector<int> sigma1;  // edge partner
  std::vector<int> vertex;  // vertex index
  std::vector<int> cycle;   // global cycle index (vertex-major order)
};

/// Empty when valid, otherwise the first violated clause.
std::optional<std::string> validate(const StableRibbonGraph& g);
/// Throws std::invalid_argument with the violation text.
void require_valid(const StableRibbonGraph& g);

HalfEdgeTables tables(const StableRibbonGraph& g);

/// sigma_inf = sigma0^{-1} o sigma1: apply sigma1 first.
std::vector<int> sigma_infinity(const StableRibbonGraph& g);
/// Orbits of sigma_inf (the perimeters), each listed from its smallest half-edge.
std::vector<std::vector<int>> perimeters(const StableRibbonGraph& g);

bool is_connected(const StableRibbonGraph& g);
/// Splits into connected components; each component keeps the induced edge order.
std::vector<StableRibbonGraph> split_components(const StableRibbonGraph& g);

struct GenusMarked {
  int genus = 0;
  int marked = 0;
  friend bool operator==(const GenusMarked&, const GenusMarked&) = default;
  auto operator<=>(const GenusMarked&) const = default;
};

/// (g, n) of a connected graph. Throws std::invalid_argument when the graph is
/// disconnected or the formulas give a non-integer or unstable value.
GenusMarked recover_g_n(const StableRibbonGraph& g);

/// Disjoint union; the orientation is the concatenation of edge orders.
StableRibbonGraph disjoint_union(const StableRibbonGraph& a, const StableRibbonGraph& b);

/// Applies a half-edge relabeling perm (old -> new); keeps edge and cycle structure.
StableRibbonGraph relabel(const StableRibbonGraph& g, const std::vector<int>& perm);

// ---- standard examples ----------------------------------------------------

/// One vertex, one cycle 0 1 2 3, edges {0,2},{1,3}: (g,n) = (1,1).
StableRibbonGraph interleaved_two_loop();
/// Two trivalent vertices joined by three edges: (g,n) = (0,3).
StableRibbonGraph theta_graph();

// ---- canonical forms --------------------------------------------------------

using GraphCode = std::vector<std::int16_t>;

struct GraphClass {
  GraphCode code;
  int sign = 1;       // parity of input edge order relative to the canonical one
  bool zero = false;  // some automorphism reverses the orientation
  int automorphisms = 1;
};

GraphClass canonical_form(const StableRibbonGraph& g);
/// The canonical representative (canonical labels and edge order).
StableRibbonGraph decode(const GraphCode& code);
int automorphism_count(const StableRibbonGraph& g);
/// Stable 64-bit hash of a code, printed as 16 hex digits.
std::string code_hash(const GraphCode& code);

std::vector<GraphClass> canonical_forms(const std::vector<StableRibbonGraph>& gs, Execution ex);

/// Formal sum of oriented graph classes (keys are canonical codes).
using GraphChain = Combination<GraphCode>;

/// Adds coeff * g, folding the orientation sign; zero-flagged graphs are dropped.
void add_graph(GraphChain& out, const StableRibbonGraph& g, const Rational& coeff);
GraphChain chain_of(const StableRibbonGraph& g, const Rational& coeff = 1);

// ---- text format ---------------------------------------------------------

/// `E=2; sigma1=[(0,2),(1,3)]; vertices=[[cycle=[0,1,2,3]; g=0; n=0]]; orient=[0,1]`
std::string to_record(const StableRibbonGraph& g);
StableRibbonGraph parse_record(std::string_view text);

}  // namespace srg
