#pragma once

// Chord diagrams, the invariants omega_c, the Wick map I from decorated
// tensors to graph chains, and the inverse construction x_Gamma.

#include "srg/complex.hpp"
#include "srg/lambda.hpp"
#include "srg/ribbon.hpp"

#include <array>
#include <span>
#include <vector>

namespace srg {

/// Perfect matching of slots 0..2k-1, pairs (i,j) with i < j, sorted by i.
struct ChordDiagram {
  std::vector<std::array<int, 2>> pairs;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// All (2k-1)!! diagrams. Throws std::invalid_argument if k < 1.
std::vector<ChordDiagram> chord_diagrams(int k);

/// Sign of reordering graded items (parities in `parity`) into the order `order`.
int koszul_sign(std::span<const int> parity, std::span<const int> order);

/// Product of pairings times the Koszul sign of slots -> (i1 j1 i2 j2 ...).
Rational omega_c(const ChordDiagram& c, std::span<const Letter> slots);

/// A product of vertex elements of Lambda; slots are read vertex by vertex,
/// factor by factor, letter by letter. Vertex order is kept as given.
struct DecoratedTensor {
  std::vector<CETerm> vertices;

  int slot_count() const;
  int parity() const;
  std::vector<Letter> slots() const;
  auto operator<=>(const DecoratedTensor&) const = default;
};

using TensorChain = Combination<DecoratedTensor>;

/// Signed sum over chord diagrams of omega_c * Gamma_c. Zero for an odd slot
/// count; scaffolds that are not stable ribbon graphs contribute zero.
GraphChain wick_map(const DecoratedTensor& x, const Rational& coeff = 1);
GraphChain wick_map(const TensorChain& x, Execution ex = Execution::serial);

/// Decorates edge k with x_{k+1} on its first half-edge and xi_{k+1} on the
/// second (ambient dimension = edge count), scaled so that I(x_Gamma) = Gamma.
/// Zero for a zero-flagged graph.
TensorChain x_gamma(const StableRibbonGraph& g);

/// Product in the CE complex: concatenated vertex lists.
TensorChain multiply(const TensorChain& a, const TensorChain& b);
/// Renames letter index i to i + shift.
DecoratedTensor shift_indices(const DecoratedTensor& x, int shift);

/// Which column of the comparison diagram.
enum class WickColumn {
  full,  // Lambda_{gamma,nu} <-> SRGC
  krgc,  // nu = 0 <-> KRGC
  rgc,   // gamma = nu = 0, single words <-> RGC
};

/// The CE differential of Lambda: D on each vertex plus brackets of vertex pairs.
TensorChain outer_differential(const TensorChain& x, Execution ex = Execution::serial);
/// Keeps the terms that survive in the given column.
TensorChain restrict_column(const TensorChain& x, WickColumn col);

}  // namespace srg
