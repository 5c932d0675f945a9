//
// Project     : mint
// Module      : constants
// Description : restricted weak-type and strong-type constants of a kernel,
//               exact by exhaustion or lower-bounded by search
//
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mint/exponents.hpp"
#include "mint/forms.hpp"

namespace mint {

enum class Provenance { Exhaustive, Search, UserSupplied };

const char* to_string(Provenance p) noexcept;

// A claimed bound at an exponent tuple, with the sets achieving it when the
// bound came out of a search.
struct EstimateClaim {
  ExponentTuple tuple;
  double bound = 0.0;
  Provenance provenance = Provenance::UserSupplied;
  std::optional<std::vector<SubsetWitness>> witness;
};

// The characteristic-function quotient at t. Good tuple:
// |Lambda(chi_E0,...,chi_Em)| / prod mu_i(E_i)^{alpha_i}. Bad tuple with bad
// index j: the weak 1/(1-alpha_j) norm of T^{*j} applied to the other
// indicators, over prod_{i != j} mu_i(E_i)^{alpha_i}; slot j's set is inert.
double char_quotient(const Kernel& kernel, const ExponentTuple& t,
                     const std::vector<SubsetWitness>& sets);

// Pairing-ordered arguments for adjoint_apply(kernel, j, .): the entries of
// fs other than slot j, slot 0's entry taking the j-th argument position.
std::vector<SimpleFunction> adjoint_arguments(int j, const std::vector<SimpleFunction>& fs);

// Exact sup of char_quotient over non-empty subset tuples; every space must
// have at most 16 points. The witness is the lexicographically smallest
// argmax (comparing member lists slot by slot); for a bad tuple the inert
// slot holds the full set.
EstimateClaim restricted_weak_constant_exhaustive(const Kernel& kernel, const ExponentTuple& t,
                                                  int threads = 1);

struct RwtOptions {
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_passes = 64;  // hill-climbing sweeps per restart
  int threads = 1;
};

// Seeded lower bound: random restarts plus single-point insertion/deletion
// hill climbing. Deterministic for a fixed seed, independent of threads.
EstimateClaim restricted_weak_constant_search(const Kernel& kernel, const ExponentTuple& t,
                                              const RwtOptions& options = {});

// Lexicographically smallest subset tuple whose quotient reaches threshold,
// under the same enumeration rules as the exhaustive sweep.
std::optional<std::vector<SubsetWitness>> first_witness_above(const Kernel& kernel,
                                                              const ExponentTuple& t,
                                                              double threshold, int threads = 1);

struct AscentOptions {
  std::uint64_t seed = 0;
  int starts = 8;
  int max_cycles = 200;
  double tolerance = 1e-10;
  std::vector<std::vector<SimpleFunction>> extra_starts;
};

// The functions and objective history behind a strong-type lower bound.
struct AscentTrace {
  std::vector<SimpleFunction> witnesses;
  std::vector<double> objective_history;  // one entry per slot update
};

// Lower bound on the strong-type constant sup |Lambda(f)| / prod
// ||f_i||_{1/alpha_i} by alternating maximisation: with the other slots
// fixed, the optimal slot-i function is the phase-aligned power
// |G|^{q-1} of G = T^{*i}(...), q conjugate to 1/alpha_i. Requires t good.
EstimateClaim strong_type_lower(const Kernel& kernel, const ExponentTuple& t,
                                const AscentOptions& options = {}, AscentTrace* trace = nullptr);

}  // namespace mint
