#pragma once

// Verification suites. Each returns a report instead of throwing, so the CLI
// and the acceptance binary can print one status per check group.

#include "srg/complex.hpp"
#include "srg/lambda.hpp"
#include "srg/wick.hpp"
#include "srg/words.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace srg {

struct CheckGroup {
  std::string name;
  long checked = 0;
  long failed = 0;
};

/// Per-generator line: canonical hash, status, first discrepancy.
struct GeneratorLine {
  std::string hash;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckGroup> groups;
  std::vector<GeneratorLine> generators;
  std::optional<std::string> first_failure;

  bool ok() const { return !first_failure.has_value(); }
  long checked() const;
  long failed() const;
  /// Counts one check in `group`; `describe` is only called on failure.
  void record(const std::string& group, bool ok, const std::function<std::string()>& describe = {});
  void merge(const VerifyReport& other);
};

struct VerifyOptions {
  int max_edges = 3;
  int euler_bound = kDefaultEulerBound;
  SymplecticSpace space{2};
  Execution execution = Execution::serial;
  std::uint64_t seed = 20240607;
};

/// boundary^2 = 0, the differential of each complex squares to zero, and the
/// boundary of a zero-flagged graph vanishes.
VerifyReport verify_d2(const VerifyOptions& o);
/// (g,n) is unchanged by every contractible edge; contractions drop one edge and stay valid.
VerifyReport verify_contraction_types(const VerifyOptions& o);
/// project o boundary = differential o project for KRGC and RGC.
VerifyReport verify_projections(const VerifyOptions& o);

/// Odd Jacobi (length <= 3), coJacobi and involutivity (length <= 4),
/// compatibility (total length <= 5), in the shifted conventions.
VerifyReport verify_bialgebra(const VerifyOptions& o);
/// div [f,g] = L_f div g - (-1)^{fg} L_g div f for monomial fields of length <= 2.
VerifyReport verify_divergence(const VerifyOptions& o);
/// bracket(a,b) = L_{alpha(a)} b for monomials of length <= 4.
VerifyReport verify_bracket_oracle(const VerifyOptions& o);
/// D^2 = 0 on the Lambda spanning set (<= 3 factors, total length <= 6),
/// BV axioms 1 and 3 on the same bounds.
VerifyReport verify_lambda(const VerifyOptions& o, int max_factors = 3, int max_length = 6);

/// I(x_Gamma) = Gamma and I(D x_Gamma) = differential(Gamma) in all three columns.
VerifyReport verify_chain_map(const VerifyOptions& o);
/// I(x_G1 x_G2) = I(x_G1) I(x_G2) and x_{G1 u G2} = x_G1 x_G2 on connected generators.
VerifyReport verify_hopf(const VerifyOptions& o);
/// Rank of the Wick images of relabeled x_Gamma tensors equals the basis size.
VerifyReport verify_wick_rank(const VerifyOptions& o);
/// (2k-1)!! diagrams for k <= 6; random odd-slot tensors map to zero.
VerifyReport verify_chords(const VerifyOptions& o, int max_k = 6, int samples = 200);

/// Sparse ranks equal dense ranks on every (complex, g, n) slice; Euler identity.
VerifyReport verify_homology(const VerifyOptions& o);
/// Enumeration equals the naive generator, all complexes, connected or not.
VerifyReport verify_enumeration(const VerifyOptions& o);

}  // namespace srg
