#pragma once

// Exhaustive generation of stable ribbon graphs, boundary matrices of the
// graded complexes and their homology ranks.

#include "srg/contraction.hpp"
#include "srg/linalg.hpp"
#include "srg/parallel.hpp"
#include "srg/ribbon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srg {

/// Unfiltered enumeration only produces connected pieces with 2g-2+n <= this bound.
inline constexpr int kDefaultEulerBound = 3;
/// CLI limit on edge counts.
inline constexpr int kDefaultMaxEdges = 6;

struct EnumerationOptions {
  int edges = 1;
  std::optional<GenusMarked> filter;  // every connected component has this (g,n)
  ComplexKind complex = ComplexKind::srgc;
  bool connected = true;
  int euler_bound = kDefaultEulerBound;  // used when no filter is given
  bool include_zero = false;             // keep classes with an odd automorphism
  Execution execution = Execution::serial;
};

/// Canonical codes of all nonzero generators with exactly `edges` edges, sorted.
std::vector<GraphCode> enumerate(const EnumerationOptions& opt);
/// Reference generator: every sigma1, every sigma0, every grouping and defect
/// assignment, then canonicalize and deduplicate. Only for small edge counts.
std::vector<GraphCode> enumerate_naive(const EnumerationOptions& opt);

/// Stable types (g,n), n >= 1, with 1 <= 2g-2+n <= bound.
std::vector<GenusMarked> stable_types(int euler_bound);
/// Edge count of a trivalent ribbon graph of type (g,n): 6g-6+3n.
int max_edges_for(GenusMarked gn);

/// (g,n) of every connected component, in component order.
std::vector<GenusMarked> component_types(const StableRibbonGraph& g);

struct ComplexSlice {
  ComplexKind complex = ComplexKind::srgc;
  std::optional<GenusMarked> filter;
  bool connected = true;
  int euler_bound = kDefaultEulerBound;
  int max_edges = 0;
  /// True when a higher edge count still has generators (the top degree is cut off).
  bool truncated = false;
  std::vector<std::vector<GraphCode>> basis;  // basis[k]: generators with k edges (k = 0 empty)
  std::vector<SparseMatrix> boundary;         // boundary[k]: C_k -> C_{k-1}, k >= 1
};

ComplexSlice build_slice(ComplexKind complex, std::optional<GenusMarked> filter, bool connected, int max_edges,
                         Execution ex = Execution::serial, int euler_bound = kDefaultEulerBound);

/// Matrix of the complex's differential on the given bases.
/// Throws std::logic_error if the image leaves the target basis.
SparseMatrix boundary_matrix(const std::vector<GraphCode>& source, const std::vector<GraphCode>& target,
                             ComplexKind complex, Execution ex = Execution::serial);

enum class RankMethod { sparse, dense };

struct HomologyTable {
  std::vector<int> dims;   // dims[k] = dim C_k
  std::vector<int> ranks;  // ranks[k] = rank of C_k -> C_{k-1}
  std::vector<int> betti;  // betti[k]
  int euler_cells() const;
  int euler_betti() const;
};

HomologyTable homology_ranks(const ComplexSlice& s, RankMethod method = RankMethod::sparse,
                             Execution ex = Execution::serial);

/// Alternating sums of cell counts per (g,n): sum_k (-1)^k dim C_k over connected generators.
struct EulerRow {
  GenusMarked type;
  std::vector<int> cells;  // by edge count
  int alternating = 0;
  bool truncated = false;
};
std::vector<EulerRow> euler_table(ComplexKind complex, int max_edges, int euler_bound, Execution ex = Execution::serial);

/// Connected components of a generator as canonical codes (with multiplicity, sorted).
std::vector<GraphCode> connected_components(const GraphCode& code);
/// Canonical class of the disjoint union of two canonical generators.
GraphClass disjoint_union(const GraphCode& a, const GraphCode& b);
/// Graph product on chains: bilinear disjoint union with the concatenated orientation.
GraphChain multiply(const GraphChain& a, const GraphChain& b);

}  // namespace srg
