#pragma once

// Exhaustive submodule lattice of a finite module, with colon ideals and the
// submodule product NK = (N:M)(K:M)M.
//
// Submodules are explicit element sets. The lattice is built by closure BFS:
// starting at (0), repeatedly add one cyclic submodule Rx and deduplicate.
// Final order is by cardinality, then lexicographic on sorted element indices,
// so (0) has id 0 and M has the last id.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "annsub/bitset.hpp"
#include "annsub/error.hpp"
#include "annsub/module.hpp"
#include "annsub/ring.hpp"

namespace annsub {

inline constexpr std::size_t kDefaultMaxSubmodules = 4096;

using SubmoduleId = std::uint32_t;

struct Submodule {
  Bitset elements;
  std::uint32_t size = 0;
  std::vector<ModuleElement> generators;  // greedy, in increasing element order
  std::size_t colon = 0;                  // index into SubmoduleLattice::ideals()
};

class SubmoduleLattice {
 public:
  static SubmoduleLattice enumerate(const ModuleSpec& module, std::size_t limit = kDefaultMaxSubmodules) {
    return SubmoduleLattice(module, limit);
  }

  const ModuleSpec& module() const { return module_; }
  const RingSpec& ring() const { return module_.ring(); }

  std::size_t size() const { return subs_.size(); }
  const Submodule& operator[](SubmoduleId id) const { return subs_[id]; }
  SubmoduleId zero() const { return 0; }
  SubmoduleId whole() const { return static_cast<SubmoduleId>(subs_.size() - 1); }
  bool is_proper(SubmoduleId id) const { return id != whole(); }
  bool is_nonzero_proper(SubmoduleId id) const { return id != zero() && id != whole(); }

  std::optional<SubmoduleId> find(const Bitset& elements) const {
    auto it = index_.find(elements);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws InvariantError if `elements` is not a submodule of M.
  SubmoduleId id_of(const Bitset& elements) const {
    if (elements.width() != module_.size()) throw InvariantError("element set has wrong width for this module");
    auto id = find(elements);
    if (!id) throw InvariantError("element set is not a submodule");
    return *id;
  }

  /// a ⊆ b
  bool leq(SubmoduleId a, SubmoduleId b) const { return above_[a].test(b); }
  /// Ids of all submodules containing `a`.
  const Bitset& supersets(SubmoduleId a) const { return above_[a]; }

  SubmoduleId intersection(SubmoduleId a, SubmoduleId b) const {
    return id_of(subs_[a].elements & subs_[b].elements);
  }

  SubmoduleId sum(SubmoduleId a, SubmoduleId b) const {
    Bitset acc = subs_[a].elements;
    for (auto g : subs_[b].generators) acc = set_sum(acc, cyclic_bits(g));
    return id_of(acc);
  }

  bool contains(SubmoduleId id, ModuleElement x) const { return subs_[id].elements.test(x.index); }

  // Ideal bookkeeping: all ideals of R, with products and IM precomputed.
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t ideal_index(const Ideal& ideal) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), ideal);
    if (it == ideals_.end() || *it != ideal) throw InvariantError("not an ideal of this ring");
    return static_cast<std::size_t>(it - ideals_.begin());
  }
  std::size_t ideal_product_index(std::size_t a, std::size_t b) const { return ideal_products_[a * ideals_.size() + b]; }
  /// IM as a submodule id.
  SubmoduleId ideal_times_module(std::size_t ideal) const { return ideal_module_[ideal]; }
  SubmoduleId ideal_times_module(const Ideal& ideal) const { return ideal_module_[ideal_index(ideal)]; }

  const Ideal& colon(SubmoduleId id) const { return ideals_[subs_[id].colon]; }
  std::size_t colon_index(SubmoduleId id) const { return subs_[id].colon; }

  /// Ann(M) = ((0):M).
  const Ideal& annihilator() const { return colon(zero()); }

  /// NK = (N:M)(K:M)M.
  SubmoduleId product(SubmoduleId n, SubmoduleId k) const {
    return ideal_module_[ideal_product_index(subs_[n].colon, subs_[k].colon)];
  }

  /// {r x : x ∈ N}; a submodule since R is commutative.
  SubmoduleId scalar_image(RingElement r, SubmoduleId n) const {
    Bitset out(module_.size());
    subs_[n].elements.for_each([&](std::size_t x) { out.set(module_.act(r, {static_cast<std::uint32_t>(x)}).index); });
    return id_of(out);
  }

  /// IN for an ideal I; I is principal, so IN = gN for its generator g.
  SubmoduleId ideal_times_submodule(const Ideal& ideal, SubmoduleId n) const {
    return scalar_image(generator(ring(), ideal), n);
  }

  SubmoduleId cyclic(ModuleElement x) const { return id_of(cyclic_bits(x)); }

  /// Submodule generated by the given elements.
  SubmoduleId span(std::span<const ModuleElement> gens) const {
    Bitset acc(module_.size());
    acc.set(0);
    for (auto g : gens) acc = set_sum(acc, cyclic_bits(g));
    return id_of(acc);
  }

  /// Submodule generated by {s g : s ∈ scalars, g ∈ M}.
  SubmoduleId scalars_times_module(std::span<const RingElement> scalars) const {
    std::vector<ModuleElement> gens;
    for (auto s : scalars)
      for (auto g : module_.generators()) gens.push_back(module_.act(s, g));
    return span(gens);
  }

  /// Ann(N) = {r : rN = 0}.
  Ideal submodule_annihilator(SubmoduleId n) const {
    std::vector<RingElement> ann;
    for (std::uint32_t r = 0; r < ring().size(); ++r) {
      bool kills = std::all_of(subs_[n].generators.begin(), subs_[n].generators.end(),
                               [&](ModuleElement g) { return module_.act({r}, g) == module_.zero(); });
      if (kills) ann.push_back({r});
    }
    return ideal_from_elements(ring(), ann);
  }

  /// Ann_M(x) = {m : x m = 0} for a ring element x.
  SubmoduleId kernel_of(RingElement x) const {
    Bitset out(module_.size());
    for (std::uint32_t m = 0; m < module_.size(); ++m)
      if (module_.act(x, {m}) == module_.zero()) out.set(m);
    return id_of(out);
  }

  /// Minimal nonzero submodules.
  const std::vector<SubmoduleId>& minimal_submodules() const { return atoms_; }

  /// Nonzero submodules contained in `n` with nothing nonzero strictly below them.
  std::vector<SubmoduleId> minimal_submodules_in(SubmoduleId n) const {
    std::vector<SubmoduleId> out;
    for (auto id : minimal_submodules())
      if (leq(id, n)) out.push_back(id);
    return out;
  }

  /// `<(1,0),(0,2)>`; the zero submodule prints as `0`.
  std::string label(SubmoduleId id) const {
    const auto& gens = subs_[id].generators;
    if (gens.empty()) return "0";
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ',';
      out += module_.element_to_string(gens[i]);
    }
    return out + ">";
  }

  std::vector<std::string> element_labels(SubmoduleId id) const {
    std::vector<std::string> out;
    subs_[id].elements.for_each(
        [&](std::size_t x) { out.push_back(module_.element_to_string({static_cast<std::uint32_t>(x)})); });
    return out;
  }

 private:
  SubmoduleLattice(const ModuleSpec& module, std::size_t limit) : module_(module) {
    const std::uint32_t n = module_.size();
    cyclic_.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      Bitset c(n);
      for (std::uint32_t r = 0; r < ring().size(); ++r) c.set(module_.act({r}, {x}).index);
      cyclic_.push_back(std::move(c));
    }
    std::vector<std::uint32_t> distinct;
    {
      std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
      for (std::uint32_t x = 1; x < n; ++x)
        if (seen.emplace(cyclic_[x], x).second) distinct.push_back(x);
    }

    std::vector<Bitset> found;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    Bitset zero_set(n);
    zero_set.set(0);
    seen.emplace(zero_set, 0);
    found.push_back(zero_set);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      Bitset current = found[queue.front()];
      queue.pop_front();
      for (auto x : distinct) {
        if (cyclic_[x].is_subset_of(current)) continue;
        Bitset next = set_sum(current, cyclic_[x]);
        if (seen.contains(next)) continue;
        if (found.size() >= limit)
          throw ResourceLimitError("submodule lattice exceeds bound " + std::to_string(limit));
        seen.emplace(next, static_cast<std::uint32_t>(found.size()));
        queue.push_back(static_cast<std::uint32_t>(found.size()));
        found.push_back(std::move(next));
      }
    }

    std::vector<std::pair<std::vector<std::size_t>, Bitset>> keyed;
    keyed.reserve(found.size());
    for (auto& b : found) keyed.emplace_back(b.indices(), std::move(b));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    subs_.reserve(keyed.size());
    for (auto& [idx, bits] : keyed) {
      Submodule s;
      s.size = static_cast<std::uint32_t>(idx.size());
      s.elements = std::move(bits);
      index_.emplace(s.elements, static_cast<SubmoduleId>(subs_.size()));
      subs_.push_back(std::move(s));
    }

    for (auto& s : subs_) s.generators = greedy_generators(s.elements);

    const std::size_t count = subs_.size();
    above_.assign(count, Bitset(count));
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a; b < count; ++b)
        if (subs_[b].size % subs_[a].size == 0 && subs_[a].elements.is_subset_of(subs_[b].elements))
          above_[a].set(b);

    for (SubmoduleId id = 1; id < count; ++id) {
      bool minimal = true;
      for (SubmoduleId other = 1; other < id && minimal; ++other)
        if (above_[other].test(id)) minimal = false;
      if (minimal) atoms_.push_back(id);
    }

    ideals_ = ideals_of(ring());
    const std::size_t ni = ideals_.size();
    ideal_products_.resize(ni * ni);
    for (std::size_t a = 0; a < ni; ++a)
      for (std::size_t b = 0; b < ni; ++b)
        ideal_products_[a * ni + b] = ideal_index(ideal_product(ring(), ideals_[a], ideals_[b]));

    for (auto& s : subs_) s.colon = ideal_index(compute_colon(s.elements));
    for (auto& ideal : ideals_) ideal_module_.push_back(scalar_image(generator(ring(), ideal), whole()));
  }

  Bitset set_sum(const Bitset& a, const Bitset& b) const {
    Bitset out(module_.size());
    a.for_each([&](std::size_t x) {
      b.for_each([&](std::size_t y) {
        out.set(module_.add({static_cast<std::uint32_t>(x)}, {static_cast<std::uint32_t>(y)}).index);
      });
    });
    return out;
  }

  const Bitset& cyclic_bits(ModuleElement x) const { return cyclic_[x.index]; }

  std::vector<ModuleElement> greedy_generators(const Bitset& elements) const {
    std::vector<ModuleElement> gens;
    Bitset spanned(module_.size());
    spanned.set(0);
    elements.for_each([&](std::size_t x) {
      if (spanned.test(x)) return;
      gens.push_back({static_cast<std::uint32_t>(x)});
      spanned = set_sum(spanned, cyclic_[x]);
    });
    return gens;
  }

  // (N:M) over the generators of M only.
  Ideal compute_colon(const Bitset& n) const {
    std::vector<RingElement> in;
    auto gens = module_.generators();
    for (std::uint32_t r = 0; r < ring().size(); ++r) {
      bool ok = std::all_of(gens.begin(), gens.end(), [&](ModuleElement g) { return n.test(module_.act({r}, g).index); });
      if (ok) in.push_back({r});
    }
    return ideal_from_elements(ring(), in);
  }

  ModuleSpec module_;
  std::vector<Bitset> cyclic_;
  std::vector<Submodule> subs_;
  std::unordered_map<Bitset, SubmoduleId, BitsetHash> index_;
  std::vector<Bitset> above_;
  std::vector<SubmoduleId> atoms_;
  std::vector<Ideal> ideals_;
  std::vector<std::size_t> ideal_products_;
  std::vector<SubmoduleId> ideal_module_;
};

/// (N:M) for an arbitrary element set; throws InvariantError if N is not a submodule.
inline Ideal colon(const SubmoduleLattice& lattice, const Bitset& n) { return lattice.colon(lattice.id_of(n)); }

/// (eM, (1-e)M) for an idempotent e.
inline std::pair<SubmoduleId, SubmoduleId> decompose_by_idempotent(const SubmoduleLattice& lattice, RingElement e) {
  const auto& ring = lattice.ring();
  if (ring.mul(e, e) != e) throw PreconditionError("element is not idempotent");
  return {lattice.scalar_image(e, lattice.whole()), lattice.scalar_image(ring.sub(ring.one(), e), lattice.whole())};
}

}  // namespace annsub
