// One line per acceptance criterion; exit status is nonzero if any fails.

#include "srg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace srg;

namespace {

VerifyOptions at(int max_edges, int euler_bound = kDefaultEulerBound) {
  VerifyOptions o;
  o.max_edges = max_edges;
  o.euler_bound = euler_bound;
  o.space = SymplecticSpace{2};
  return o;
}

VerifyReport all_of(std::vector<VerifyReport> rs) {
  VerifyReport out;
  for (const auto& r : rs) out.merge(r);
  return out;
}

struct Criterion {
  int id;
  const char* what;
  std::function<VerifyReport()> run;
};

}  // namespace

int main() {
  init_threads_from_env();
  const std::vector<Criterion> criteria{
      {1, "boundary squares to zero, <= 4 edges, components with 2g-2+n <= 4, all complexes",
       [] { return verify_d2(at(4, 4)); }},
      {2, "contraction keeps (g,n), <= 4 edges", [] { return verify_contraction_types(at(4, 4)); }},
      {3, "projections commute with the boundary, <= 4 edges", [] { return verify_projections(at(4, 4)); }},
      {4, "Lie bialgebra identities and divergence commutator over Q^{2|2}",
       [] { return all_of({verify_bialgebra(at(3)), verify_divergence(at(3))}); }},
      {5, "bracket equals the Lie derivative along the hamiltonian field, length <= 4",
       [] { return verify_bracket_oracle(at(3)); }},
      {6, "D^2 = 0 and BV axioms on Lambda, <= 3 factors, length <= 6", [] { return verify_lambda(at(3), 3, 6); }},
      {7, "Wick round trip and chain map <= 3 edges, multiplicativity <= 2 edges, rank <= 3 edges",
       [] { return all_of({verify_chain_map(at(3)), verify_hopf(at(2)), verify_wick_rank(at(3))}); }},
      {8, "chord diagram counts k <= 6 and odd-slot vanishing", [] { return verify_chords(at(3), 6, 200); }},
      {9, "sparse ranks equal dense ranks and Euler identity, <= 4 edges", [] { return verify_homology(at(4)); }},
      {10, "enumeration equals the naive generator, <= 3 edges, all complexes",
       [] { return verify_enumeration(at(3)); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && r.ok() && r.checked() > 0;
    if (!ok) ++failures;
    std::printf("criterion %d: %s  %s  [%ld checks, %ld failed, %.1fs]\n", c.id, ok ? "PASS" : "FAIL", c.what,
                r.checked(), r.failed(), secs);
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
    if (r.first_failure) std::printf("  first failure: %s\n", r.first_failure->c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
