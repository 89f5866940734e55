#pragma once

// The Chevalley-Eilenberg complex of h with its BV structure, and the
// two-parameter family Lambda_{gamma,nu} with differential D = gamma*delta + Delta.
//
// A term is gamma^a nu^b y_1 ... y_k with nonempty words y_i in graded
// symmetric normal form. An empty word factor is absorbed as one power of nu,
// so S(h) = Q[nu] (x) S(h_{>=1}) holds in the data model.

#include "srg/combination.hpp"
#include "srg/parallel.hpp"
#include "srg/words.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srg {

struct CETerm {
  int gamma = 0;
  int nu = 0;
  std::vector<CyclicWord> factors;  // sorted, nonempty

  int parity() const;
  int total_length() const;

  auto operator<=>(const CETerm&) const = default;
};

using CEChain = Combination<CETerm>;

struct NormalizedTerm {
  CETerm term;
  int sign = 1;  // 0 when the product vanishes

  bool is_zero() const { return sign == 0; }
};

/// Graded-symmetric normal form. Empty factors become powers of nu; a
/// repeated odd factor gives zero.
NormalizedTerm normalize_term(int gamma, int nu, std::vector<CyclicWord> factors);
void add_term(CEChain& out, int gamma, int nu, std::vector<CyclicWord> factors, const Rational& coeff);
CEChain make_chain(int gamma, int nu, std::vector<CyclicWord> factors, const Rational& coeff = 1);

/// Membership in Lambda_{gamma,nu}: no pure scalars, and a lone factor of
/// length 1 needs a positive power of gamma or nu.
bool in_lambda(const CETerm& t);
std::optional<std::string> lambda_violation(const CEChain& c);

/// The CE differential (bracket terms only; h carries no internal differential).
CEChain ce_delta(const CEChain& c, Execution ex = Execution::serial);
/// The cobracket extended to S(h) by the Leibniz rule.
CEChain extended_cobracket(const CEChain& c, Execution ex = Execution::serial);
/// D = gamma*delta + Delta on the full algebra (keeps pure scalar terms).
CEChain deformed_differential_raw(const CEChain& c, Execution ex = Execution::serial);
/// D on Lambda_{gamma,nu}: requires membership, drops the trivial ideal Q[gamma,nu].
/// Throws std::invalid_argument on a membership violation.
CEChain deformed_differential(const CEChain& c, Execution ex = Execution::serial);
/// The quotient by the trivial ideal: drops terms with no factors.
CEChain quotient_scalars(const CEChain& c);

/// BV bracket extending the bracket of h by the Leibniz rule.
CEChain extended_bracket(const CEChain& a, const CEChain& b);
/// Graded symmetric product.
CEChain multiply(const CEChain& a, const CEChain& b);

/// Sets nu and/or gamma to zero.
CEChain specialize(const CEChain& c, bool set_nu_zero, bool set_gamma_zero);
/// pi: Lambda -> h_{>=2}. Throws std::invalid_argument if any term carries gamma or nu.
HamiltonianElement project_to_g(const CEChain& c, SymplecticSpace space);

/// Strictly quadratic words: the image of pe inside h_{>=2}.
bool is_linear_symplectic(const CyclicWord& w);
std::vector<CyclicWord> pe_basis(SymplecticSpace space);

/// Spanning terms of Lambda_{gamma,nu}[V] with exponents (0,0), except that a
/// lone length-1 factor gets (1,0) and (0,1).
std::vector<CETerm> lambda_spanning_set(SymplecticSpace space, int max_factors, int max_total_length);

/// Text format: "coef * gamma^a * nu^b * (w1 | w2 | ...)" per term.
std::string to_string(const CETerm& t);
std::string to_string(const CEChain& c);
/// Parses one line in the format above (may omit the gamma/nu factors).
CEChain parse_chain_line(std::string_view line);

}  // namespace srg
