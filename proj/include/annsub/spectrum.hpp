#pragma once

// Prime, maximal, semiprime and extraordinary submodules; module-level
// predicates (simple, prime, semisimple) for a submodule viewed as a module.

#include <algorithm>
#include <optional>
#include <vector>

#include "annsub/error.hpp"
#include "annsub/lattice.hpp"

namespace annsub {

/// r e ∈ P with r ∉ (P:M) and e ∉ P.
struct PrimeWitness {
  RingElement r;
  ModuleElement e;
};

/// Returns the first violating pair (ring outer loop, module inner), or nullopt if P is prime.
inline std::optional<PrimeWitness> prime_violation(const SubmoduleLattice& lattice, SubmoduleId p) {
  if (!lattice.is_proper(p)) throw PreconditionError("prime requires proper");
  const auto& module = lattice.module();
  const auto& ring = lattice.ring();
  const auto& colon = lattice.colon(p);
  const auto& elems = lattice[p].elements;
  for (std::uint32_t r = 0; r < ring.size(); ++r) {
    if (contains(ring, colon, {r})) continue;
    for (std::uint32_t e = 0; e < module.size(); ++e)
      if (!elems.test(e) && elems.test(module.act({r}, {e}).index)) return PrimeWitness{{r}, {e}};
  }
  return std::nullopt;
}

inline bool is_prime_submodule(const SubmoduleLattice& lattice, SubmoduleId p) {
  return !prime_violation(lattice, p).has_value();
}

inline std::vector<SubmoduleId> maximal_submodules(const SubmoduleLattice& lattice) {
  std::vector<SubmoduleId> out;
  for (SubmoduleId id = 0; id < lattice.whole(); ++id)
    if (lattice.supersets(id).count() == 2) out.push_back(id);
  return out;
}

inline std::vector<SubmoduleId> prime_submodules(const SubmoduleLattice& lattice) {
  std::vector<SubmoduleId> out;
  for (SubmoduleId id = 0; id < lattice.whole(); ++id)
    if (is_prime_submodule(lattice, id)) out.push_back(id);
  return out;
}

/// rad_M(N): intersection of the given primes that contain N; M if none does.
inline SubmoduleId rad(const SubmoduleLattice& lattice, SubmoduleId n, const std::vector<SubmoduleId>& primes) {
  Bitset acc = lattice[lattice.whole()].elements;
  for (auto p : primes)
    if (lattice.leq(n, p)) acc &= lattice[p].elements;
  return lattice.id_of(acc);
}

inline SubmoduleId rad(const SubmoduleLattice& lattice, SubmoduleId n) {
  return rad(lattice, n, prime_submodules(lattice));
}

/// I^2 K ⊆ N ⇒ IK ⊆ N for every ideal I and submodule K. Returns the first violating (I, K).
inline std::optional<std::pair<Ideal, SubmoduleId>> semiprime_violation(const SubmoduleLattice& lattice,
                                                                        SubmoduleId n) {
  if (!lattice.is_proper(n)) throw PreconditionError("semiprime requires proper");
  const auto& ring = lattice.ring();
  for (const auto& ideal : lattice.ideals()) {
    auto square = ideal_product(ring, ideal, ideal);
    for (SubmoduleId k = 0; k < lattice.size(); ++k) {
      if (!lattice.leq(lattice.ideal_times_submodule(square, k), n)) continue;
      if (!lattice.leq(lattice.ideal_times_submodule(ideal, k), n)) return std::make_pair(ideal, k);
    }
  }
  return std::nullopt;
}

inline bool is_semiprime_submodule(const SubmoduleLattice& lattice, SubmoduleId n) {
  return !semiprime_violation(lattice, n).has_value();
}

/// All finite (nonempty) intersections of the given primes, by pairwise-intersection fixpoint. Sorted.
inline std::vector<SubmoduleId> intersection_closure(const SubmoduleLattice& lattice,
                                                     const std::vector<SubmoduleId>& primes) {
  std::vector<SubmoduleId> closure(primes.begin(), primes.end());
  Bitset member(lattice.size());
  for (auto p : primes) member.set(p);
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto meet = lattice.intersection(closure[i], closure[j]);
      if (!member.test(meet)) {
        member.set(meet);
        closure.push_back(meet);
      }
    }
  std::sort(closure.begin(), closure.end());
  return closure;
}

/// Whenever K ∩ L ⊆ P for K, L intersections of primes, K ⊆ P or L ⊆ P.
inline bool is_extraordinary(const SubmoduleLattice& lattice, SubmoduleId p, const std::vector<SubmoduleId>& primes) {
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw PreconditionError("extraordinary requires a prime submodule");
  auto closure = intersection_closure(lattice, primes);
  for (auto k : closure) {
    if (lattice.leq(k, p)) continue;
    for (auto l : closure)
      if (!lattice.leq(l, p) && lattice.leq(lattice.intersection(k, l), p)) return false;
  }
  return true;
}

// Predicates on a submodule X regarded as an R-module in its own right.

inline bool is_simple_module(const SubmoduleLattice& lattice, SubmoduleId x) {
  if (x == lattice.zero()) return false;
  for (SubmoduleId id = 1; id < x; ++id)
    if (lattice.leq(id, x)) return false;
  return true;
}

/// (0) is prime in X: r y = 0 with y ∈ X nonzero forces rX = 0.
inline bool is_prime_module(const SubmoduleLattice& lattice, SubmoduleId x) {
  if (x == lattice.zero()) return false;
  const auto& module = lattice.module();
  const auto& ring = lattice.ring();
  auto ann = lattice.submodule_annihilator(x);
  bool prime = true;
  for (std::uint32_t r = 0; r < ring.size() && prime; ++r) {
    if (contains(ring, ann, {r})) continue;
    lattice[x].elements.for_each([&](std::size_t y) {
      if (y != 0 && module.act({r}, {static_cast<std::uint32_t>(y)}) == module.zero()) prime = false;
    });
  }
  return prime;
}

/// X is the sum of its simple submodules.
inline bool is_semisimple_module(const SubmoduleLattice& lattice, SubmoduleId x) {
  SubmoduleId acc = lattice.zero();
  for (auto s : lattice.minimal_submodules_in(x)) acc = lattice.sum(acc, s);
  return acc == x;
}

struct SpectrumData {
  std::vector<SubmoduleId> primes;
  std::vector<SubmoduleId> maximals;
  SubmoduleId radical_of_zero = 0;
  bool is_simple = false;
  bool is_prime_module = false;
  bool is_semiprime_module = false;
  bool is_faithful = false;
  /// Maximal submodules that failed the prime test; always expected empty.
  std::vector<SubmoduleId> non_prime_maximals;
};

inline SpectrumData spec_and_max(const SubmoduleLattice& lattice) {
  SpectrumData data;
  data.primes = prime_submodules(lattice);
  data.maximals = maximal_submodules(lattice);
  for (auto m : data.maximals)
    if (!std::binary_search(data.primes.begin(), data.primes.end(), m)) data.non_prime_maximals.push_back(m);
  data.radical_of_zero = rad(lattice, lattice.zero(), data.primes);
  data.is_simple = lattice.size() == 2;
  data.is_prime_module = std::binary_search(data.primes.begin(), data.primes.end(), lattice.zero());
  data.is_semiprime_module = is_semiprime_submodule(lattice, lattice.zero());
  data.is_faithful = is_zero(lattice.ring(), lattice.annihilator());
  return data;
}

}  // namespace annsub
