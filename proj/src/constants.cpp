#include "mint/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mint/lorentz.hpp"
#include "mint/parallel.hpp"
#include "mint/rng.hpp"
#include "mint/summation.hpp"

namespace mint {

namespace {

constexpr Eigen::Index kExhaustiveCap = 16;

bool members_less(const std::vector<Eigen::Index>& a, const std::vector<Eigen::Index>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool witness_less(const std::vector<SubsetWitness>& a, const std::vector<SubsetWitness>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (members_less(a[i].members, b[i].members)) return true;
    if (members_less(b[i].members, a[i].members)) return false;
  }
  return false;
}

double measure_power_product(const std::vector<SubsetWitness>& sets, const Eigen::VectorXd& alpha,
                             int skip = -1) {
  double prod = 1.0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (int(i) == skip) continue;
    prod *= std::pow(measure_of(sets[i].space, sets[i]), alpha[Eigen::Index(i)]);
  }
  return prod;
}

void check_sets(const Kernel& kernel, const std::vector<SubsetWitness>& sets) {
  const std::size_t slots = kernel.spaces().size();
  if (sets.size() != slots) raise(ErrorCode::LengthMismatch, "one subset per slot is required");
  for (std::size_t i = 0; i < slots; ++i) {
    if (sets[i].space != kernel.space(int(i)))
      raise(ErrorCode::SpaceMismatch, "subset " + std::to_string(i) + " lives elsewhere");
    if (sets[i].members.empty())
      raise(ErrorCode::EmptySet, "subset " + std::to_string(i) + " is empty");
  }
}

// One candidate during a sweep: masks for the active slots.
struct Candidate {
  double quotient;
  std::vector<SubsetWitness> sets;
};

// Evaluates the quotient for given per-slot masks, the inert slot (bad
// tuples) carrying the full set.
Candidate evaluate_candidate(const Kernel& kernel, const ExponentTuple& t, int inert,
                             const std::vector<std::uint32_t>& masks) {
  const std::size_t slots = kernel.spaces().size();
  std::vector<SubsetWitness> sets;
  sets.reserve(slots);
  std::size_t a = 0;
  for (std::size_t i = 0; i < slots; ++i)
    sets.push_back(int(i) == inert ? full_subset(kernel.space(int(i)))
                                   : subset_from_mask(kernel.space(int(i)), masks[a++]));
  return Candidate{char_quotient(kernel, t, sets), std::move(sets)};
}

// Total order used by every reduction: larger quotient first, ties broken
// towards the lexicographically smaller witness. Partition-independent.
bool candidate_better(const Candidate& a, const Candidate& b) {
  if (a.quotient != b.quotient) return a.quotient > b.quotient;
  return witness_less(a.sets, b.sets);
}

std::vector<Eigen::Index> active_slots(const Kernel& kernel, int inert) {
  std::vector<Eigen::Index> slots;
  for (int i = 0; i < int(kernel.spaces().size()); ++i)
    if (i != inert) slots.push_back(i);
  return slots;
}

int inert_slot(const ExponentTuple& t) {
  const Classification cls = classify(t);
  return cls.good ? -1 : cls.bad_index;
}

void require_small_spaces(const Kernel& kernel) {
  for (const auto& s : kernel.spaces())
    if (s.size() > kExhaustiveCap)
      raise(ErrorCode::SpaceTooLarge, "exhaustive sweeps cap spaces at " +
                                          std::to_string(kExhaustiveCap) + " points");
}

// Runs fn on every tuple of non-empty masks over the active slots. The
// outermost active slot is split across threads; fn(task, masks) must fold
// into per-task state only.
template <typename Fn>
void sweep_masks(const Kernel& kernel, int inert, int threads, std::size_t tasks, Fn&& fn) {
  const auto slots = active_slots(kernel, inert);
  const std::uint32_t outer_count = (std::uint32_t(1) << kernel.space(int(slots[0])).size()) - 1;
  parallel_for(Eigen::Index(tasks), threads, [&](Eigen::Index task) {
    std::vector<std::uint32_t> masks(slots.size(), 1);
    const std::uint32_t lo = 1 + std::uint32_t((std::uint64_t(outer_count) * std::size_t(task)) / tasks);
    const std::uint32_t hi = std::uint32_t((std::uint64_t(outer_count) * (std::size_t(task) + 1)) / tasks);
    for (std::uint32_t outer = lo; outer <= hi; ++outer) {
      masks[0] = outer;
      // odometer over the remaining active slots
      for (std::size_t i = 1; i < slots.size(); ++i) masks[i] = 1;
      while (true) {
        fn(std::size_t(task), masks);
        std::size_t i = slots.size() - 1;
        for (; i >= 1; --i) {
          const std::uint32_t full = (std::uint32_t(1) << kernel.space(int(slots[i])).size()) - 1;
          if (++masks[i] <= full) break;
          masks[i] = 1;
        }
        if (i == 0) break;
      }
    }
  });
}

}  // namespace

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Exhaustive: return "exhaustive";
    case Provenance::Search: return "search";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "user-supplied";
}

std::vector<SimpleFunction> adjoint_arguments(int j, const std::vector<SimpleFunction>& fs) {
  const int m = int(fs.size()) - 1;
  if (j < 0 || j > m) raise(ErrorCode::SlotOutOfRange, "adjoint slot out of range");
  std::vector<SimpleFunction> gs;
  gs.reserve(std::size_t(m));
  for (int slot = 1; slot < j; ++slot) gs.push_back(fs[std::size_t(slot)]);
  if (j >= 1) gs.push_back(fs[0]);
  for (int slot = j + 1; slot <= m; ++slot) gs.push_back(fs[std::size_t(slot)]);
  return gs;
}

double char_quotient(const Kernel& kernel, const ExponentTuple& t,
                     const std::vector<SubsetWitness>& sets) {
  if (t.size() != Eigen::Index(kernel.spaces().size()))
    raise(ErrorCode::LengthMismatch, "tuple length must match the kernel arity");
  check_sets(kernel, sets);

  const Classification cls = classify(t);
  std::vector<SimpleFunction> chis;
  chis.reserve(sets.size());
  for (const auto& e : sets) chis.push_back(indicator(e));

  if (cls.good) {
    const double numerator = std::abs(evaluate_form(kernel, chis));
    return numerator / measure_power_product(sets, t.entries());
  }

  const int j = cls.bad_index;
  const SimpleFunction image = adjoint_apply(kernel, j, adjoint_arguments(j, chis));
  const double numerator = weak_norm(image, Exponent(1.0 / (1.0 - t[j])));
  return numerator / measure_power_product(sets, t.entries(), j);
}

EstimateClaim restricted_weak_constant_exhaustive(const Kernel& kernel, const ExponentTuple& t,
                                                  int threads) {
  require_small_spaces(kernel);
  const int inert = inert_slot(t);
  const std::size_t tasks = std::size_t(std::max(1, threads)) * 4;

  std::vector<std::optional<Candidate>> best(tasks);
  sweep_masks(kernel, inert, threads, tasks,
              [&](std::size_t task, const std::vector<std::uint32_t>& masks) {
                Candidate cand = evaluate_candidate(kernel, t, inert, masks);
                if (!best[task] || candidate_better(cand, *best[task]))
                  best[task] = std::move(cand);
              });

  std::optional<Candidate> overall;
  for (auto& b : best)
    if (b && (!overall || candidate_better(*b, *overall))) overall = std::move(b);

  return EstimateClaim{t, overall ? overall->quotient : 0.0, Provenance::Exhaustive,
                       overall ? std::optional(std::move(overall->sets)) : std::nullopt};
}

std::optional<std::vector<SubsetWitness>> first_witness_above(const Kernel& kernel,
                                                              const ExponentTuple& t,
                                                              double threshold, int threads) {
  require_small_spaces(kernel);
  const int inert = inert_slot(t);
  const std::size_t tasks = std::size_t(std::max(1, threads)) * 4;

  std::vector<std::optional<std::vector<SubsetWitness>>> best(tasks);
  sweep_masks(kernel, inert, threads, tasks,
              [&](std::size_t task, const std::vector<std::uint32_t>& masks) {
                Candidate cand = evaluate_candidate(kernel, t, inert, masks);
                if (cand.quotient >= threshold &&
                    (!best[task] || witness_less(cand.sets, *best[task])))
                  best[task] = std::move(cand.sets);
              });

  std::optional<std::vector<SubsetWitness>> overall;
  for (auto& b : best)
    if (b && (!overall || witness_less(*b, *overall))) overall = std::move(b);
  return overall;
}

EstimateClaim restricted_weak_constant_search(const Kernel& kernel, const ExponentTuple& t,
                                              const RwtOptions& options) {
  if (t.size() != Eigen::Index(kernel.spaces().size()))
    raise(ErrorCode::LengthMismatch, "tuple length must match the kernel arity");
  if (options.restarts < 1 || options.max_passes < 1)
    raise(ErrorCode::InvalidInput, "search needs at least one restart and one pass");
  const int inert = inert_slot(t);
  const auto slots = active_slots(kernel, inert);
  for (const auto s : slots)
    if (kernel.space(int(s)).size() > 32)
      raise(ErrorCode::SpaceTooLarge, "search masks cap spaces at 32 points");

  std::vector<std::optional<Candidate>> per_restart(std::size_t(options.restarts));
  parallel_for(options.restarts, options.threads, [&](Eigen::Index restart) {
    Rng rng(Rng::mix(options.seed, std::uint64_t(restart)));
    std::vector<std::uint32_t> masks(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const std::uint64_t full = (std::uint64_t(1) << kernel.space(int(slots[i])).size()) - 1;
      masks[i] = std::uint32_t(rng.uniform_int(1, std::int64_t(full)));
    }
    Candidate cur = evaluate_candidate(kernel, t, inert, masks);
    for (int pass = 0; pass < options.max_passes; ++pass) {
      bool improved = false;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const Eigen::Index bits = kernel.space(int(slots[i])).size();
        for (Eigen::Index bit = 0; bit < bits; ++bit) {
          const std::uint32_t flipped = masks[i] ^ (std::uint32_t(1) << bit);
          if (flipped == 0) continue;
          const std::uint32_t saved = masks[i];
          masks[i] = flipped;
          Candidate next = evaluate_candidate(kernel, t, inert, masks);
          if (next.quotient > cur.quotient) {
            cur = std::move(next);
            improved = true;
          } else {
            masks[i] = saved;
          }
        }
      }
      if (!improved) break;
    }
    per_restart[std::size_t(restart)] = std::move(cur);
  });

  std::optional<Candidate> overall;
  for (auto& b : per_restart)
    if (b && (!overall || candidate_better(*b, *overall))) overall = std::move(b);

  return EstimateClaim{t, overall ? overall->quotient : 0.0, Provenance::Search,
                       overall ? std::optional(std::move(overall->sets)) : std::nullopt};
}

namespace {

double strong_objective(const Kernel& kernel, const ExponentTuple& t,
                        const std::vector<SimpleFunction>& fs) {
  double denom = 1.0;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    denom *= lp_norm(fs[std::size_t(i)], Exponent(1.0 / t[i]));
  if (denom == 0.0) return 0.0;
  return std::abs(evaluate_form(kernel, fs)) / denom;
}

// One ascent run from a given start; appends per-update objectives.
double ascend(const Kernel& kernel, const ExponentTuple& t, std::vector<SimpleFunction>& fs,
              const AscentOptions& options, std::vector<double>* history) {
  double objective = strong_objective(kernel, t, fs);
  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    const double at_cycle_start = objective;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const SimpleFunction g =
          adjoint_apply(kernel, int(i), adjoint_arguments(int(i), fs));
      const double q = dual_exponent(Exponent(1.0 / t[i]));
      Eigen::ArrayXcd updated(g.values.size());
      bool all_zero = true;
      for (Eigen::Index x = 0; x < g.values.size(); ++x) {
        const double mag = std::abs(g.values[x]);
        if (mag == 0.0) {
          updated[x] = Complex(0.0, 0.0);
        } else {
          updated[x] = std::conj(g.values[x] / mag) * std::pow(mag, q - 1.0);
          all_zero = false;
        }
      }
      if (!all_zero) {
        SimpleFunction candidate{fs[std::size_t(i)].space, std::move(updated)};
        const double norm = lp_norm(candidate, Exponent(1.0 / t[i]));
        candidate.values /= norm;
        std::vector<SimpleFunction> trial = fs;
        trial[std::size_t(i)] = candidate;
        const double trial_objective = strong_objective(kernel, t, trial);
        if (trial_objective >= objective) {
          fs = std::move(trial);
          objective = trial_objective;
        }
      }
      if (history) history->push_back(objective);
    }
    if (objective <= at_cycle_start * (1.0 + options.tolerance)) break;
  }
  return objective;
}

}  // namespace

EstimateClaim strong_type_lower(const Kernel& kernel, const ExponentTuple& t,
                                const AscentOptions& options, AscentTrace* trace) {
  if (t.size() != Eigen::Index(kernel.spaces().size()))
    raise(ErrorCode::LengthMismatch, "tuple length must match the kernel arity");
  if (!classify(t).good) raise(ErrorCode::NotGoodTuple, "strong-type ascent needs a good tuple");
  if (options.starts < 1 && options.extra_starts.empty())
    raise(ErrorCode::InvalidInput, "ascent needs at least one start");

  struct RunResult {
    double objective = -1.0;
    std::vector<SimpleFunction> fs;
    std::vector<double> history;
  };
  const std::size_t random_starts = std::size_t(std::max(0, options.starts));
  const std::size_t total = random_starts + options.extra_starts.size();
  std::vector<RunResult> runs(total);

  for (std::size_t run = 0; run < total; ++run) {
    std::vector<SimpleFunction> fs;
    if (run < random_starts) {
      Rng rng(Rng::mix(options.seed, std::uint64_t(run)));
      for (const auto& space : kernel.spaces()) {
        Eigen::ArrayXcd values(space.size());
        for (Eigen::Index x = 0; x < space.size(); ++x) values[x] = rng.gaussian();
        fs.push_back(SimpleFunction{space, std::move(values)});
      }
    } else {
      fs = options.extra_starts[run - random_starts];
      if (fs.size() != kernel.spaces().size())
        raise(ErrorCode::LengthMismatch, "ascent start needs one function per slot");
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].space != kernel.space(int(i)))
          raise(ErrorCode::SpaceMismatch, "ascent start lives on the wrong spaces");
    }
    RunResult& out = runs[run];
    out.fs = std::move(fs);
    out.objective = ascend(kernel, t, out.fs, options, &out.history);
  }

  std::size_t best = 0;
  for (std::size_t run = 1; run < total; ++run)
    if (runs[run].objective > runs[best].objective) best = run;

  if (trace) {
    trace->witnesses = runs[best].fs;
    trace->objective_history = std::move(runs[best].history);
  }
  return EstimateClaim{t, std::max(runs[best].objective, 0.0), Provenance::Search, std::nullopt};
}

}  // namespace mint
