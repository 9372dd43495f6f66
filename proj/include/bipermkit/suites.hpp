#ifndef BIPERMKIT_SUITES_HPP
#define BIPERMKIT_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "dcat.hpp"
#include "gamma.hpp"
#include "gro.hpp"
#include "report.hpp"

namespace bpk {

struct SuiteConfig
{
  std::string instance = "mandellA";
  int size = 4;   // number-like instances
  int len = 2;    // sequence length
  int max = 3;    // sequence entries
  int trunc = 3;  // Gamma truncation
  int arity = 3;  // largest outer arity in multifunctor suites
  std::uint64_t seed = 1;
};

DBound bound_of(SuiteConfig const &c);

// ---- generators

// Deterministic list of vector-valued additive functors over d: discrete and
// ordered variants over small semirings, plus the constant functor. Objects of
// d in the suites stay small, so semirings are chosen by the size of d's
// largest fibre.
std::vector<AsmfPtr> generated_smfs(BipermPtr d, int count);

// c * x^n with c drawn from the semiring of x; arity 0 is a constant.
NatPtr random_product_nat(Rng &g, std::shared_ptr<const VecFunctor> const &x, int arity);
// c <= c' on the same sources, when the semiring is ordered.
std::pair<ModPtr, NatPtr> random_scalar_mod(Rng &g, NatPtr const &from);

GMapPtr random_product_multimap(Rng &g, std::shared_ptr<const MonoidPowerGamma> const &y,
                                int arity);
std::pair<GModPtr, GMapPtr> random_scalar_gamma_mod(Rng &g, GMapPtr const &from);

// Gamma-categories at truncation n for the A suite.
std::vector<GammaPtr> generated_gammas(int n);

// ---- suites

// Bipermutative axioms and the Laplaza paths for one instance.
Report suite_instance(SuiteConfig const &c);

// int X as a permutative category, exhaustively over bound x fibres, and U_X as
// a permutative opfibration.
Report suite_grothendieck(AsmfPtr const &x, std::vector<Obj> const &bound, std::uint64_t seed);
// suite_grothendieck over generated functors on the sequence instance and on
// finite sets.
Report suite_grothendieck_generated(SuiteConfig const &c, int count);

// int on multimorphisms: n-linear and opcartesian axioms, units and gamma,
// the pseudo symmetry axioms for every permutation, and the symmetry
// obstruction.
Report suite_gro_multifunctor(SuiteConfig const &c, int cells);

// preimage and reconstruction round trips.
Report suite_roundtrip(SuiteConfig const &c, int count);

// A: additive functors, arity 0, strict symmetric multifunctor.
Report suite_A(SuiteConfig const &c);

// P: the terminal example, P_s = id iff s = id, composed against direct
// pseudo symmetry, and the pseudo symmetry axioms.
Report suite_inverse_k(SuiteConfig const &c, bool terminal);

// E-infinity algebras in each bipermutative instance and in Gamma-Cat, and the
// P-image of the Gamma one.
Report suite_einfty(SuiteConfig const &c);

} // namespace bpk

#endif
