#pragma once

// Registry of machine-checkable characterization results for AG(M) and
// AG(M)*, evaluated exhaustively on finite instances.
//
// Every check is a hypothesis plus a claim, both computed only through the
// ring/module/spectrum/graph layers. A false hypothesis yields NotApplicable;
// a failed claim yields Fail with a witness object naming the sides that
// disagreed and the submodules or elements involved.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "annsub/export.hpp"
#include "annsub/graph.hpp"
#include "annsub/lattice.hpp"
#include "annsub/module.hpp"
#include "annsub/ring.hpp"
#include "annsub/spectrum.hpp"

namespace annsub {

struct Limits {
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t max_submodules = kDefaultMaxSubmodules;
  std::size_t max_exact_vertices = kDefaultMaxExactVertices;
};

struct InstanceDescriptor {
  std::string ring;
  std::string module;
  friend auto operator<=>(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

inline std::string to_string(const InstanceDescriptor& d) { return d.ring + " " + d.module; }

/// Everything the checks consult about one (R, M), computed once.
struct InstanceContext {
  RingSpec ring;
  ModuleSpec module;
  SubmoduleLattice lattice;
  SpectrumData spectrum;
  AnnGraph ag, ag_star;
  GraphAnalysis ag_analysis, star_analysis;

  Ideal nil;
  bool reduced = false;
  bool local = false;
  bool domain = false;
  std::vector<Ideal> maximal_ideals;
  std::vector<Ideal> min_primes;
  std::vector<RingElement> idempotents;
  std::vector<RingElement> zero_divisors;
  std::vector<RingElement> z_module;
  std::vector<Ideal> associated;
  bool faithful = false;
  bool ann_nil = false;
  bool whole_is_vertex = false;

  std::size_t nonzero_proper_count() const { return lattice.size() - 2; }

  static InstanceContext build(const RingSpec& ring, const ModuleSpec& module, const Limits& limits = {}) {
    return InstanceContext(ring, module, limits);
  }

  static InstanceContext build(const InstanceDescriptor& d, const Limits& limits = {}) {
    auto ring = RingSpec::parse(d.ring);
    auto module = ModuleSpec::parse(ring, d.module, limits.max_elements);
    return InstanceContext(ring, module, limits);
  }

  InstanceDescriptor descriptor() const { return {ring.to_string(), module.to_string()}; }

 private:
  InstanceContext(const RingSpec& r, const ModuleSpec& m, const Limits& limits)
      : ring(r), module(m), lattice(SubmoduleLattice::enumerate(m, limits.max_submodules)) {
    spectrum = spec_and_max(lattice);
    ag = build_ag(lattice);
    ag_star = build_ag_star(lattice);
    AnalysisLimits al{limits.max_exact_vertices};
    ag_analysis = analyze(ag, al);
    star_analysis = analyze(ag_star, al);
    nil = nilradical(ring);
    reduced = is_zero(ring, nil);
    maximal_ideals = annsub::maximal_ideals(ring);
    local = maximal_ideals.size() == 1;
    domain = is_domain(ring);
    min_primes = annsub::min_primes(ring);
    idempotents = annsub::idempotents(ring);
    zero_divisors = annsub::zero_divisors(ring);
    z_module = z_of_module(module);
    associated = ass(module);
    faithful = spectrum.is_faithful;
    ann_nil = is_subset(lattice.annihilator(), nil);
    whole_is_vertex = ag.position_of(lattice.whole()).has_value();
  }
};

enum class CheckMode { assert_mode, report_only };
enum class CheckStatus { pass, fail, not_applicable };

inline std::string to_string(CheckMode m) { return m == CheckMode::assert_mode ? "assert" : "report-only"; }
inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "Pass";
    case CheckStatus::fail: return "Fail";
    default: return "NotApplicable";
  }
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::not_applicable;
  Json witness = Json::object();
};

struct TheoremCheck {
  std::string id;
  CheckMode mode;
  std::string statement;
  std::function<CheckOutcome(const InstanceContext&)> evaluate;
};

struct CheckReport {
  std::string theorem;
  CheckMode mode = CheckMode::assert_mode;
  InstanceDescriptor instance;
  CheckStatus status = CheckStatus::not_applicable;
  Json witness;
  double millis = 0;
};

namespace checks {

// ---------------------------------------------------------------------------
// Shared predicates, all phrased through the public layers.

using Pred = std::function<bool(SubmoduleId)>;

struct Split {
  RingElement e;
  SubmoduleId first, second;  // eM, (1-e)M
};

/// An idempotent e with eM satisfying `first` and (1-e)M satisfying `second`.
inline std::optional<Split> idempotent_split(const InstanceContext& c, const Pred& first, const Pred& second) {
  for (auto e : c.idempotents) {
    auto [em, fm] = decompose_by_idempotent(c.lattice, e);
    if (first(em) && second(fm)) return Split{e, em, fm};
  }
  return std::nullopt;
}

inline Pred simple(const InstanceContext& c) {
  return [&](SubmoduleId x) { return is_simple_module(c.lattice, x); };
}
inline Pred prime_module(const InstanceContext& c) {
  return [&](SubmoduleId x) { return is_prime_module(c.lattice, x); };
}
inline Pred prime_semisimple(const InstanceContext& c) {
  return [&](SubmoduleId x) { return is_prime_module(c.lattice, x) && is_semisimple_module(c.lattice, x); };
}

inline Json split_json(const InstanceContext& c, const std::optional<Split>& s) {
  if (!s) return nullptr;
  return {{"e", c.ring.element_to_string(s->e)},
          {"eM", c.lattice.label(s->first)},
          {"(1-e)M", c.lattice.label(s->second)}};
}

inline std::string sub(const InstanceContext& c, SubmoduleId id) { return c.lattice.label(id); }
inline std::string ideal(const InstanceContext& c, const Ideal& i) { return to_string(c.ring, i); }

inline std::vector<RingElement> ideal_elements(const InstanceContext& c, const Ideal& i) { return elements(c.ring, i); }

/// Set, when it is an ideal.
inline std::optional<Ideal> as_ideal(const InstanceContext& c, const std::vector<RingElement>& set) {
  try {
    return ideal_from_elements(c.ring, set);
  } catch (const InvariantError&) {
    return std::nullopt;
  }
}

inline Ideal principal(const InstanceContext& c, RingElement a) { return principal_ideal(c.ring, a); }

inline bool has_universal(const GraphAnalysis& a) { return !a.universal.empty(); }

// A graph needs a nonempty vertex set; statements about one are vacuous otherwise.
inline bool empty(const AnnGraph& g) { return g.vertices.empty(); }

/// R local with maximal ideal in Ass(M); returns that ideal.
inline std::optional<Ideal> local_max_in_ass(const InstanceContext& c) {
  if (!c.local) return std::nullopt;
  const auto& p = c.maximal_ideals.front();
  if (std::find(c.associated.begin(), c.associated.end(), p) == c.associated.end()) return std::nullopt;
  return p;
}

/// Nonzero m with Ann(m) = p.
inline std::vector<ModuleElement> elements_with_annihilator(const InstanceContext& c, const Ideal& p) {
  std::vector<ModuleElement> out;
  for (std::uint32_t x = 1; x < c.module.size(); ++x)
    if (element_annihilator(c.module, {x}) == p) out.push_back({x});
  return out;
}

/// Λ(M)* as a sorted id list.
inline std::vector<SubmoduleId> nonzero_proper(const InstanceContext& c) {
  std::vector<SubmoduleId> out;
  for (SubmoduleId id = 1; id < c.lattice.whole(); ++id) out.push_back(id);
  return out;
}

inline SubmoduleId power_times_module(const InstanceContext& c, const Ideal& p, unsigned n) {
  return c.lattice.ideal_times_module(ideal_power(c.ring, p, n));
}

/// Products s_1 ⋯ s_n over a scalar set (with repetition).
inline std::vector<RingElement> set_power(const InstanceContext& c, const std::vector<RingElement>& s, unsigned n) {
  std::set<RingElement> acc{c.ring.one()};
  for (unsigned k = 0; k < n; ++k) {
    std::set<RingElement> next;
    for (auto a : acc)
      for (auto b : s) next.insert(c.ring.mul(a, b));
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

/// Z(R)^n M, the submodule generated by products of n zero-divisors acting on M.
inline SubmoduleId zr_power_module(const InstanceContext& c, unsigned n) {
  auto scalars = set_power(c, c.zero_divisors, n);
  return c.lattice.scalars_times_module(scalars);
}

inline std::set<SubmoduleId> as_set(const std::vector<SubmoduleId>& v) { return {v.begin(), v.end()}; }

/// Exact value test on χ, using bounds when the exact value was not computed.
inline std::optional<bool> chromatic_is(const GraphAnalysis& a, std::size_t k) {
  if (a.chromatic_number) return *a.chromatic_number == k;
  if (k < a.chromatic_lower || k > a.chromatic_upper) return false;
  return std::nullopt;
}

inline CheckOutcome na(Json why = Json::object()) { return {CheckStatus::not_applicable, std::move(why)}; }

inline CheckOutcome verdict(bool ok, Json witness) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, ok ? Json::object() : std::move(witness)};
}

/// Pass when all named sides agree; the witness lists every side.
inline CheckOutcome equivalence(const std::vector<std::pair<std::string, bool>>& sides, Json extra = Json::object()) {
  bool all_same = std::all_of(sides.begin(), sides.end(), [&](auto& s) { return s.second == sides.front().second; });
  Json w = Json::object();
  Json values = Json::object();
  for (auto& [name, v] : sides) values[name] = v;
  w["sides"] = values;
  for (auto& [k, v] : extra.items()) w[k] = v;
  return verdict(all_same, w);
}

inline Json undetermined(const GraphAnalysis& a) {
  return {{"undetermined", "chromatic number above exact-search cap"},
          {"chromatic_bounds", {a.chromatic_lower, a.chromatic_upper}}};
}

// ---------------------------------------------------------------------------
// Individual checks.

inline CheckOutcome minimal_square_or_idempotent(const InstanceContext& c) {
  if (!c.ann_nil) return na();
  for (auto n : c.lattice.minimal_submodules()) {
    if (c.lattice.product(n, n) == c.lattice.zero()) continue;
    bool idem = std::any_of(c.idempotents.begin(), c.idempotents.end(), [&](RingElement e) {
      return c.lattice.scalar_image(e, c.lattice.whole()) == n;
    });
    if (!idem) return verdict(false, {{"minimal_submodule", sub(c, n)}, {"square", sub(c, c.lattice.product(n, n))}});
  }
  return verdict(true, {});
}

/// Some nonzero proper N with Z(M) = Ann((N:M)M).
inline std::optional<SubmoduleId> zm_annihilator_witness(const InstanceContext& c) {
  for (auto n : nonzero_proper(c)) {
    auto nm = c.lattice.ideal_times_module(c.lattice.colon_index(n));
    if (ideal_elements(c, c.lattice.submodule_annihilator(nm)) == c.z_module) return n;
  }
  return std::nullopt;
}

inline CheckOutcome universal_vertex_ag(const InstanceContext& c) {
  if (!c.ann_nil || empty(c.ag)) return na();
  auto split = idempotent_split(c, simple(c), prime_module(c));
  auto zm = zm_annihilator_witness(c);
  bool lhs = has_universal(c.ag_analysis);
  bool rhs = split || zm || c.whole_is_vertex;
  return equivalence({{"universal_vertex", lhs}, {"characterization", rhs}},
                     {{"split", split_json(c, split)},
                      {"z_module_annihilator", zm ? Json(sub(c, *zm)) : Json(nullptr)},
                      {"whole_is_vertex", c.whole_is_vertex}});
}

inline CheckOutcome universal_vertex_ag_star(const InstanceContext& c) {
  if (!c.faithful || empty(c.ag_star)) return na();
  auto split = idempotent_split(c, simple(c), prime_module(c));
  auto ann = annihilator_witness(c.ring, c.zero_divisors, true);
  bool lhs = has_universal(c.star_analysis);
  bool rhs = split || ann;
  return equivalence({{"universal_vertex", lhs}, {"characterization", rhs}},
                     {{"split", split_json(c, split)},
                      {"z_ring_annihilator_of", ann ? Json(ideal(c, *ann)) : Json(nullptr)}});
}

inline CheckOutcome reduced_star(const InstanceContext& c) {
  if (!(c.reduced && c.ann_nil) || empty(c.ag_star)) return na();
  auto split = idempotent_split(c, simple(c), prime_module(c));
  return equivalence({{"a_universal_vertex", has_universal(c.star_analysis)},
                      {"b_star", is_star(c.star_analysis, true)},
                      {"c_simple_plus_prime", split.has_value()}},
                     {{"split", split_json(c, split)}});
}

inline CheckOutcome artinian_universal_ag(const InstanceContext& c) {
  if (!c.ann_nil || empty(c.ag)) return na();
  auto split = idempotent_split(c, simple(c), prime_semisimple(c));
  auto p = local_max_in_ass(c);
  bool rhs = split || p || c.whole_is_vertex;
  return equivalence({{"universal_vertex", has_universal(c.ag_analysis)}, {"characterization", rhs}},
                     {{"split", split_json(c, split)},
                      {"local_max_in_ass", p ? Json(ideal(c, *p)) : Json(nullptr)},
                      {"whole_is_vertex", c.whole_is_vertex}});
}

inline CheckOutcome artinian_universal_ag_star(const InstanceContext& c) {
  if (!c.faithful || empty(c.ag_star)) return na();
  auto split = idempotent_split(c, simple(c), simple(c));
  auto p = local_max_in_ass(c);
  return equivalence({{"universal_vertex", has_universal(c.star_analysis)}, {"characterization", split || p}},
                     {{"split", split_json(c, split)}, {"local_max_in_ass", p ? Json(ideal(c, *p)) : Json(nullptr)}});
}

/// Nonzero m with p = Ann(m), (mR)^2 = 0 and p^4 M = 0.
inline std::optional<ModuleElement> square_zero_socle_element(const InstanceContext& c, const Ideal& p) {
  if (power_times_module(c, p, 4) != c.lattice.zero()) return std::nullopt;
  for (auto m : elements_with_annihilator(c, p)) {
    auto rm = c.lattice.cyclic(m);
    if (c.lattice.product(rm, rm) == c.lattice.zero()) return m;
  }
  return std::nullopt;
}

inline CheckOutcome star_implies_structure(const InstanceContext& c) {
  if (!(c.ann_nil && is_star(c.ag_analysis, true) && !c.whole_is_vertex)) return na();
  auto split = idempotent_split(c, simple(c), prime_semisimple(c));
  std::optional<ModuleElement> m;
  if (c.local) m = square_zero_socle_element(c, c.maximal_ideals.front());
  return verdict(split || m, {{"split", nullptr}, {"local", c.local}, {"socle_element", nullptr}});
}

enum class LocalStarCase { none, a, b, c };

/// Which of the three local shapes of a star AG(M) hold for mR, p = Ann(m).
inline LocalStarCase local_star_case(const InstanceContext& c, const Ideal& p, ModuleElement m) {
  const auto& L = c.lattice;
  auto rm = L.cyclic(m);
  auto p1 = power_times_module(c, p, 1);
  auto p2 = power_times_module(c, p, 2);
  auto p3 = power_times_module(c, p, 3);
  auto p4 = power_times_module(c, p, 4);
  if (p2 == L.zero() && p1 == rm && c.nonzero_proper_count() == 1) return LocalStarCase::a;
  if (p3 == L.zero() && p2 == rm && L.minimal_submodules() == std::vector<SubmoduleId>{rm}) {
    bool products_ok = true;
    auto np = nonzero_proper(c);
    for (std::size_t i = 0; i < np.size() && products_ok; ++i)
      for (std::size_t j = i + 1; j < np.size() && products_ok; ++j)
        if (np[i] != rm && np[j] != rm && L.product(np[i], np[j]) != rm) products_ok = false;
    if (products_ok) return LocalStarCase::b;
  }
  if (p4 == L.zero() && p3 != L.zero() && p3 == rm) {
    std::set<SubmoduleId> expected{p2, p3};
    for (auto n : nonzero_proper(c))
      if (L.colon_index(n) == L.colon_index(p1)) expected.insert(n);
    if (expected == as_set(nonzero_proper(c))) return LocalStarCase::c;
  }
  return LocalStarCase::none;
}

inline CheckOutcome star_characterization(const InstanceContext& c) {
  if (!(c.ann_nil && !c.whole_is_vertex)) return na();
  auto split = idempotent_split(c, simple(c), simple(c));
  std::string local_case;
  if (c.local) {
    const auto& p = c.maximal_ideals.front();
    for (auto m : elements_with_annihilator(c, p)) {
      auto k = local_star_case(c, p, m);
      if (k != LocalStarCase::none) {
        local_case = std::string(k == LocalStarCase::a ? "a" : k == LocalStarCase::b ? "b" : "c") + " with m=" +
                     c.module.element_to_string(m);
        break;
      }
    }
  }
  bool rhs = split || !local_case.empty();
  return equivalence({{"star", is_star(c.ag_analysis, true)}, {"characterization", rhs}},
                     {{"split", split_json(c, split)},
                      {"local_case", local_case.empty() ? Json(nullptr) : Json(local_case)},
                      {"vertices", c.ag_analysis.vertex_count},
                      {"edges", c.ag_analysis.edge_count}});
}

/// Type (c): local R with exactly two nonzero proper ideals Z(R) = aR and Z(R)^2, a^3 = 0,
/// Spec(M) = Max(M) = {aM}, every nonzero proper N is a vertex and N != aM has (N:M) = a^2 R.
inline std::optional<RingElement> complete_type_c(const InstanceContext& c) {
  if (!c.local) return std::nullopt;
  auto zr = as_ideal(c, c.zero_divisors);
  if (!zr) return std::nullopt;
  std::vector<Ideal> nonzero_proper_ideals;
  for (auto& i : c.lattice.ideals())
    if (!is_zero(c.ring, i) && !is_unit(c.ring, i)) nonzero_proper_ideals.push_back(i);
  auto zr2 = ideal_product(c.ring, *zr, *zr);
  std::set<Ideal> expected{*zr, zr2};
  if (nonzero_proper_ideals.size() != 2 || std::set<Ideal>(nonzero_proper_ideals.begin(), nonzero_proper_ideals.end()) != expected)
    return std::nullopt;
  for (auto np : nonzero_proper(c))
    if (!c.ag.position_of(np)) return std::nullopt;
  for (std::uint32_t ai = 0; ai < c.ring.size(); ++ai) {
    RingElement a{ai};
    if (principal(c, a) != *zr) continue;
    auto a2 = c.ring.mul(a, a);
    if (c.ring.mul(a2, a) != c.ring.zero()) continue;
    auto am = c.lattice.scalar_image(a, c.lattice.whole());
    if (c.spectrum.primes != std::vector<SubmoduleId>{am} || c.spectrum.maximals != std::vector<SubmoduleId>{am})
      continue;
    auto a2r = principal(c, a2);
    bool colons = true;
    for (auto n : nonzero_proper(c))
      if (n != am && c.lattice.colon(n) != a2r) colons = false;
    if (colons) return a;
  }
  return std::nullopt;
}

inline CheckOutcome complete_characterization(const InstanceContext& c) {
  if (!(c.faithful && !c.whole_is_vertex)) return na();
  auto split = idempotent_split(c, simple(c), simple(c));
  auto zr = as_ideal(c, c.zero_divisors);
  bool type_b = zr && is_zero(c.ring, ideal_product(c.ring, *zr, *zr));
  auto type_c = complete_type_c(c);
  return equivalence({{"complete", c.ag_analysis.complete},
                      {"characterization", split || type_b || type_c}},
                     {{"type_a", split_json(c, split)},
                      {"type_b", type_b},
                      {"type_c", type_c ? Json(c.ring.element_to_string(*type_c)) : Json(nullptr)},
                      {"vertices", c.ag_analysis.vertex_count}});
}

/// Exactly three nonzero proper submodules m1R, m2R, m3R with m3R = m1R ∩ m2R, Z(R) = Ann(m3),
/// and all three square to zero.
inline bool three_cyclic_shape(const InstanceContext& c) {
  auto np = nonzero_proper(c);
  if (np.size() != 3) return false;
  const auto& L = c.lattice;
  for (auto n : np)
    if (L[n].generators.size() != 1 || L.product(n, n) != L.zero()) return false;
  for (std::size_t k = 0; k < 3; ++k) {
    auto n3 = np[k];
    auto n1 = np[(k + 1) % 3];
    auto n2 = np[(k + 2) % 3];
    if (L.intersection(n1, n2) != n3) continue;
    bool ann_ok = false;
    L[n3].elements.for_each([&](std::size_t x) {
      if (x == 0 || ann_ok) return;
      ModuleElement m{static_cast<std::uint32_t>(x)};
      if (L.cyclic(m) == n3 && ideal_elements(c, element_annihilator(c.module, m)) == c.zero_divisors) ann_ok = true;
    });
    if (ann_ok) return true;
  }
  return false;
}

inline CheckOutcome small_vertex_counts(const InstanceContext& c) {
  if (!(c.faithful && !c.whole_is_vertex)) return na();
  const auto& a = c.ag_analysis;
  auto np = as_set(nonzero_proper(c));
  auto split = idempotent_split(c, simple(c), simple(c));
  auto zm1 = zr_power_module(c, 1);
  auto zm2 = zr_power_module(c, 2);
  auto zm3 = zr_power_module(c, 3);

  bool a_lhs = a.complete && a.vertex_count == 1;
  bool a_rhs = np.size() == 1;
  bool b_lhs = a.vertex_count == 2;
  bool b_rhs = split || (np.size() == 2 && np == std::set<SubmoduleId>{zm1, zm2});
  bool c_lhs = a.vertex_count == 3;
  bool c_rhs = three_cyclic_shape(c) || np == std::set<SubmoduleId>{zm1, zm2, zm3};
  Json w = {{"a", {{"one_vertex_complete", a_lhs}, {"one_nonzero_proper", a_rhs}}},
            {"b", {{"two_vertices", b_lhs}, {"characterization", b_rhs}}},
            {"c", {{"three_vertices", c_lhs}, {"characterization", c_rhs}}},
            {"vertices", a.vertex_count},
            {"nonzero_proper_submodules", np.size()}};
  return verdict(a_lhs == a_rhs && b_lhs == b_rhs && c_lhs == c_rhs, w);
}

inline bool all_vertices_in(const InstanceContext& c, const std::vector<SubmoduleId>& set) {
  return std::all_of(c.ag.vertices.begin(), c.ag.vertices.end(),
                     [&](SubmoduleId v) { return std::binary_search(set.begin(), set.end(), v); });
}

inline CheckOutcome prime_vertices(const InstanceContext& c) {
  if (c.domain || !c.faithful || !all_vertices_in(c, c.spectrum.primes)) return na();
  auto split = idempotent_split(c, simple(c), simple(c));
  return verdict(split || c.nonzero_proper_count() == 1,
                 {{"vertices", c.ag_analysis.vertex_count}, {"nonzero_proper_submodules", c.nonzero_proper_count()}});
}

inline CheckOutcome vertices_max_spec(const InstanceContext& c) {
  if (c.domain || !c.faithful) return na();
  auto split = idempotent_split(c, simple(c), simple(c));
  return equivalence({{"a_vertices_in_max", all_vertices_in(c, c.spectrum.maximals)},
                      {"b_vertices_eq_max", c.ag.vertices == c.spectrum.maximals},
                      {"c_vertices_eq_spec", c.ag.vertices == c.spectrum.primes},
                      {"d_vertices_in_spec", all_vertices_in(c, c.spectrum.primes)},
                      {"e_two_simples_or_unique", split || c.nonzero_proper_count() == 1}});
}

inline CheckOutcome chromatic_one(const InstanceContext& c) {
  if (!c.faithful) return na();
  auto chi1 = chromatic_is(c.ag_analysis, 1);
  if (!chi1) return na(undetermined(c.ag_analysis));
  return equivalence({{"chromatic_one", *chi1}, {"one_nonzero_proper", c.nonzero_proper_count() == 1}});
}

struct BipartiteSides {
  std::optional<bool> chi2;
  bool bipartite_two_parts;
  bool complete_bipartite;
};

inline BipartiteSides bipartite_sides(const GraphAnalysis& a) {
  return {chromatic_is(a, 2), a.bipartite && a.vertex_count >= 2, a.complete_bipartite};
}

inline CheckOutcome chromatic_two(const InstanceContext& c) {
  if (!c.faithful || empty(c.ag_star)) return na();
  auto s = bipartite_sides(c.star_analysis);
  if (!s.chi2) return na(undetermined(c.star_analysis));
  bool d = (c.reduced && c.min_primes.size() == 2) || (c.star_analysis.star);
  return equivalence({{"a_chromatic_two", *s.chi2},
                      {"b_bipartite", s.bipartite_two_parts},
                      {"c_complete_bipartite", s.complete_bipartite},
                      {"d_two_min_primes_or_star", d}},
                     {{"vertices", c.star_analysis.vertex_count}, {"min_primes", c.min_primes.size()}});
}

inline CheckOutcome chromatic_two_artinian(const InstanceContext& c) {
  if (!c.faithful || empty(c.ag_star)) return na();
  auto s = bipartite_sides(c.star_analysis);
  if (!s.chi2) return na(undetermined(c.star_analysis));
  auto split = idempotent_split(c, simple(c), simple(c));
  bool d = split || (c.star_analysis.star && c.local);
  return equivalence({{"a_chromatic_two", *s.chi2},
                      {"b_bipartite", s.bipartite_two_parts},
                      {"c_complete_bipartite", s.complete_bipartite},
                      {"d_two_simples_or_local_star", d}},
                     {{"split", split_json(c, split)}, {"vertices", c.star_analysis.vertex_count}});
}

inline CheckOutcome chromatic_two_reduced(const InstanceContext& c) {
  if (!(c.reduced && c.faithful) || empty(c.ag_star)) return na();
  auto s = bipartite_sides(c.star_analysis);
  if (!s.chi2) return na(undetermined(c.star_analysis));
  return equivalence({{"a_chromatic_two", *s.chi2},
                      {"b_bipartite", s.bipartite_two_parts},
                      {"c_complete_bipartite", s.complete_bipartite},
                      {"d_two_min_primes", c.min_primes.size() == 2}},
                     {{"min_primes", c.min_primes.size()}});
}

inline CheckOutcome annihilator_primes_product(const InstanceContext& c) {
  // Ann_M(x) for every x, keeping those that are prime submodules.
  std::vector<std::pair<RingElement, SubmoduleId>> prime_kernels;
  for (std::uint32_t x = 0; x < c.ring.size(); ++x) {
    auto k = c.lattice.kernel_of({x});
    if (std::binary_search(c.spectrum.primes.begin(), c.spectrum.primes.end(), k)) prime_kernels.push_back({{x}, k});
  }
  bool applicable = false;
  for (std::size_t i = 0; i < prime_kernels.size(); ++i)
    for (std::size_t j = 0; j < prime_kernels.size(); ++j) {
      auto [x1, p1] = prime_kernels[i];
      auto [x2, p2] = prime_kernels[j];
      if (p1 == p2) continue;
      applicable = true;
      auto x1m = c.lattice.scalar_image(x1, c.lattice.whole());
      auto x2m = c.lattice.scalar_image(x2, c.lattice.whole());
      if (c.lattice.product(x1m, x2m) != c.lattice.zero())
        return verdict(false, {{"x1", c.ring.element_to_string(x1)},
                               {"x2", c.ring.element_to_string(x2)},
                               {"P1", sub(c, p1)},
                               {"P2", sub(c, p2)},
                               {"product", sub(c, c.lattice.product(x1m, x2m))}});
    }
  if (!applicable) return na();
  return verdict(true, {});
}

inline std::vector<RingElement> union_of(const InstanceContext& c, const std::vector<Ideal>& ideals) {
  std::set<RingElement> u;
  for (auto& i : ideals)
    for (auto r : ideal_elements(c, i)) u.insert(r);
  return {u.begin(), u.end()};
}

inline CheckOutcome reduced_zm_faithful(const InstanceContext& c) {
  if (!(c.reduced && c.z_module == union_of(c, c.min_primes))) return na();
  return verdict(c.faithful, {{"annihilator", ideal(c, c.lattice.annihilator())}});
}

inline CheckOutcome semiprime_faithful(const InstanceContext& c) {
  if (!c.spectrum.is_semiprime_module) return na();
  return verdict(c.faithful, {{"semiprime", true},
                              {"faithful", c.faithful},
                              {"annihilator", ideal(c, c.lattice.annihilator())}});
}

inline CheckOutcome coloring_equals_min_primes(const InstanceContext& c) {
  if (!(c.spectrum.radical_of_zero == c.lattice.zero() && c.faithful) || empty(c.ag_star)) return na();
  const auto& a = c.star_analysis;
  const std::size_t k = c.min_primes.size();
  Json w = {{"k", k},
            {"chromatic", a.chromatic_number ? Json(*a.chromatic_number) : Json(nullptr)},
            {"clique", a.clique_number ? Json(*a.clique_number) : Json(nullptr)},
            {"chromatic_bounds", {a.chromatic_lower, a.chromatic_upper}},
            {"clique_bounds", {a.clique_lower, a.clique_upper}}};
  if (a.chromatic_number && a.clique_number)
    return verdict(*a.chromatic_number == k && *a.clique_number == k, w);
  if (k < a.clique_lower || k > a.clique_upper || k < a.chromatic_lower || k > a.chromatic_upper)
    return verdict(false, w);
  return na(undetermined(a));
}

inline CheckOutcome square_zero_sum_premise(const InstanceContext& c) {
  const auto& L = c.lattice;
  std::vector<SubmoduleId> upsilon;
  for (auto v : c.ag_star.vertices)
    if (L.product(v, v) == L.zero()) upsilon.push_back(v);
  if (upsilon.empty()) return na();
  SubmoduleId total = L.zero();
  SubmoduleId colon_total = L.zero();
  for (auto n : upsilon) {
    total = L.sum(total, n);
    colon_total = L.sum(colon_total, L.ideal_times_module(L.colon_index(n)));
  }
  auto lhs = L.ideal_times_module(L.colon_index(total));
  auto rhs = L.ideal_times_module(L.colon_index(colon_total));
  Json w = {{"upsilon_size", upsilon.size()}, {"lhs", sub(c, lhs)}, {"rhs", sub(c, rhs)}};
  return {lhs == rhs ? CheckStatus::pass : CheckStatus::fail, w};
}

}  // namespace checks

inline const std::vector<TheoremCheck>& registry() {
  using enum CheckMode;
  static const std::vector<TheoremCheck> checks = {
      {"CHK-2.4", assert_mode, "Ann(M) nil: every minimal N has N^2 = 0 or N = eM", checks::minimal_square_or_idempotent},
      {"CHK-2.5", assert_mode, "Ann(M) nil: AG(M) has a universal vertex iff simple+prime split, Z(M) = Ann((N:M)M), or M is a vertex",
       checks::universal_vertex_ag},
      {"CHK-2.7", assert_mode, "M faithful: AG(M)* has a universal vertex iff simple+prime split or Z(R) is an annihilator ideal",
       checks::universal_vertex_ag_star},
      {"CHK-2.9", assert_mode, "R reduced, Ann(M) nil: universal vertex in AG(M)* iff AG(M)* star iff simple+prime split",
       checks::reduced_star},
      {"CHK-2.10", assert_mode, "Ann(M) nil: AG(M) universal vertex iff simple+prime-semisimple split, local with max in Ass(M), or M a vertex",
       checks::artinian_universal_ag},
      {"CHK-2.12", assert_mode, "M faithful: AG(M)* universal vertex iff two simples or local with max in Ass(M)",
       checks::artinian_universal_ag_star},
      {"CHK-2.13", assert_mode, "Ann(M) nil, AG(M) star, M not a vertex: split or local with (mR)^2 = 0 and p^4 M = 0",
       checks::star_implies_structure},
      {"CHK-2.14", assert_mode, "M not a vertex, Ann(M) nil: AG(M) star iff two simples or local cases (a)/(b)/(c)",
       checks::star_characterization},
      {"CHK-2.15", assert_mode, "M faithful, not a vertex: AG(M) complete iff types (a)/(b)/(c)",
       checks::complete_characterization},
      {"CHK-2.16", assert_mode, "M faithful, not a vertex: one/two/three vertex characterizations", checks::small_vertex_counts},
      {"CHK-2.17", assert_mode, "R not a domain, M faithful, all vertices prime: two simples or one nonzero proper submodule",
       checks::prime_vertices},
      {"CHK-2.18", report_only, "R not a domain, M faithful: items (a)-(e) agree", checks::vertices_max_spec},
      {"CHK-3.1", assert_mode, "M faithful: chi(AG(M)) = 1 iff one nonzero proper submodule", checks::chromatic_one},
      {"CHK-3.2", assert_mode, "M faithful: chi(AG(M)*) = 2 iff bipartite iff complete bipartite iff reduced with two min primes or star",
       checks::chromatic_two},
      {"CHK-3.3", assert_mode, "M faithful, R Artinian: chi(AG(M)*) = 2 iff two simples or local star", checks::chromatic_two_artinian},
      {"CHK-3.4", assert_mode, "R reduced, M faithful: chi(AG(M)*) = 2 iff two minimal primes", checks::chromatic_two_reduced},
      {"CHK-3.6", assert_mode, "distinct prime Ann_M(x1), Ann_M(x2): (x1M)(x2M) = 0", checks::annihilator_primes_product},
      {"CHK-3.7a", assert_mode, "R reduced, Z(M) = union of minimal primes: M faithful", checks::reduced_zm_faithful},
      {"CHK-3.7b", report_only, "M semiprime: M faithful", checks::semiprime_faithful},
      {"CHK-3.12", assert_mode, "rad(0) = 0, M faithful: chi(AG(M)*) = cl(AG(M)*) = |Min(R)|", checks::coloring_equals_min_primes},
      {"PROP-3.14a", report_only, "(sum Y : M)M = (sum (N:M)M : M)M over square-zero AG(M)* vertices Y",
       checks::square_zero_sum_premise},
  };
  return checks;
}

inline const TheoremCheck& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw ParseError("unknown theorem id '" + id + "'");
}

/// Expands `all` and comma-separated lists into registry ids, in registry order.
inline std::vector<std::string> resolve_ids(const std::string& spec) {
  std::vector<std::string> out;
  if (spec == "all" || spec.empty()) {
    for (const auto& c : registry()) out.push_back(c.id);
    return out;
  }
  std::set<std::string> wanted;
  for (auto part : detail::split(spec, ',')) wanted.insert(find_check(std::string(part)).id);
  for (const auto& c : registry())
    if (wanted.contains(c.id)) out.push_back(c.id);
  return out;
}

inline CheckReport run_check(const TheoremCheck& check, const InstanceContext& ctx) {
  auto start = std::chrono::steady_clock::now();
  auto outcome = check.evaluate(ctx);
  auto end = std::chrono::steady_clock::now();
  CheckReport r;
  r.theorem = check.id;
  r.mode = check.mode;
  r.instance = ctx.descriptor();
  r.status = outcome.status;
  r.witness = std::move(outcome.witness);
  r.millis = std::chrono::duration<double, std::milli>(end - start).count();
  return r;
}

inline CheckReport run_check(const std::string& id, const RingSpec& ring, const ModuleSpec& module,
                             const Limits& limits = {}) {
  const auto& check = find_check(id);
  auto ctx = InstanceContext::build(ring, module, limits);
  return run_check(check, ctx);
}

inline Json to_json(const CheckReport& r, bool with_timing = true) {
  Json j;
  j["theorem"] = r.theorem;
  j["instance"] = {{"ring", r.instance.ring}, {"module", r.instance.module}};
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["millis"] = with_timing ? r.millis : 0.0;
  return j;
}

struct CorpusBounds {
  std::uint32_t max_ring = 48;
  std::uint32_t max_module = 128;
  std::size_t max_lattice = kDefaultMaxSubmodules;
};

namespace detail {

// Nondecreasing lists of divisors (> 1) of m with product <= budget.
inline void shapes_for(std::uint32_t m, std::uint64_t budget, std::vector<std::uint32_t>& current, std::size_t from,
                       std::vector<std::vector<std::uint32_t>>& out) {
  out.push_back(current);
  auto divs = divisors_of(m);
  for (std::size_t i = from; i < divs.size(); ++i) {
    auto d = divs[i];
    if (d == 1 || d > budget) continue;
    current.push_back(d);
    shapes_for(m, budget / d, current, i, out);
    current.pop_back();
  }
}

inline std::string group_text(const std::vector<std::uint32_t>& orders) {
  if (orders.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  return out;
}

inline std::uint64_t product_of(const std::vector<std::uint32_t>& v) {
  std::uint64_t p = 1;
  for (auto x : v) p *= x;
  return p;
}

}  // namespace detail

/// Every (R, M) with R = Z_n or Z_a x Z_b (a <= b) within the ring bound, and every
/// module shape within the module bound whose lattice fits.
inline std::vector<InstanceDescriptor> generate_corpus(const CorpusBounds& bounds) {
  if (bounds.max_ring < 2 || bounds.max_module < 2 || bounds.max_lattice < 2)
    throw PreconditionError("corpus bounds must be positive");
  std::vector<std::vector<std::uint32_t>> rings;
  for (std::uint32_t n = 2; n <= bounds.max_ring; ++n) rings.push_back({n});
  for (std::uint32_t a = 2; a * a <= bounds.max_ring; ++a)
    for (std::uint32_t b = a; a * b <= bounds.max_ring; ++b) rings.push_back({a, b});

  std::vector<InstanceDescriptor> out;
  for (const auto& moduli : rings) {
    RingSpec ring(moduli);
    std::vector<std::vector<std::vector<std::uint32_t>>> per_factor;
    for (auto m : moduli) {
      std::vector<std::vector<std::uint32_t>> shapes;
      std::vector<std::uint32_t> current;
      detail::shapes_for(m, bounds.max_module, current, 0, shapes);
      std::sort(shapes.begin(), shapes.end());
      per_factor.push_back(std::move(shapes));
    }
    // Cartesian product of per-factor shapes, lexicographic.
    std::vector<std::size_t> pick(moduli.size(), 0);
    while (true) {
      std::uint64_t size = 1;
      std::string text;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        const auto& s = per_factor[i][pick[i]];
        size *= detail::product_of(s);
        if (i) text += ';';
        text += detail::group_text(s);
      }
      if (size > 1 && size <= bounds.max_module) {
        try {
          auto module = ModuleSpec::parse(ring, text, bounds.max_module);
          SubmoduleLattice::enumerate(module, bounds.max_lattice);
          out.push_back({ring.to_string(), module.to_string()});
        } catch (const ResourceLimitError&) {
        }
      }
      std::size_t i = moduli.size();
      while (i > 0) {
        --i;
        if (++pick[i] < per_factor[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = moduli.size() + 1;
          break;
        }
      }
      if (i == moduli.size() + 1) break;
    }
  }
  return out;
}

struct TheoremTally {
  std::size_t applicable = 0, pass = 0, fail = 0, not_applicable = 0;
};

struct CorpusResult {
  std::vector<CheckReport> reports;  // instance order, then registry order
  std::map<std::string, TheoremTally> tallies;
  std::size_t instances = 0;
  std::size_t assert_failures = 0;
  std::size_t report_only_failures = 0;
  double total_millis = 0;

  bool failed() const { return assert_failures > 0; }
};

/// Runs the selected checks on each instance; `jobs` workers share the instance list.
inline CorpusResult run_corpus(const std::vector<InstanceDescriptor>& corpus, const std::vector<std::string>& ids,
                               const Limits& limits = {}, unsigned jobs = 1) {
  auto start = std::chrono::steady_clock::now();
  std::vector<const TheoremCheck*> selected;
  for (const auto& id : ids) selected.push_back(&find_check(id));

  // Parse everything first so a bad descriptor aborts before any work.
  for (const auto& d : corpus) {
    try {
      auto ring = RingSpec::parse(d.ring);
      ModuleSpec::parse(ring, d.module, limits.max_elements);
    } catch (const ParseError& e) {
      throw ParseError("instance '" + to_string(d) + "': " + e.what());
    }
  }

  std::vector<std::vector<CheckReport>> per_instance(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        auto ctx = InstanceContext::build(corpus[i], limits);
        for (auto* check : selected) per_instance[i].push_back(run_check(*check, ctx));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  CorpusResult result;
  result.instances = corpus.size();
  for (const auto& id : ids) result.tallies[id];
  for (auto& reports : per_instance)
    for (auto& r : reports) {
      auto& t = result.tallies[r.theorem];
      switch (r.status) {
        case CheckStatus::pass: ++t.applicable, ++t.pass; break;
        case CheckStatus::fail:
          ++t.applicable, ++t.fail;
          (r.mode == CheckMode::assert_mode ? result.assert_failures : result.report_only_failures)++;
          break;
        default: ++t.not_applicable;
      }
      result.reports.push_back(std::move(r));
    }
  result.total_millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// JSON array of report entries followed by a summary object.
inline Json to_json(const CorpusResult& result, bool with_timing = true) {
  Json out = Json::array();
  for (const auto& r : result.reports) out.push_back(to_json(r, with_timing));
  Json theorems = Json::object();
  for (const auto& check : registry()) {
    auto it = result.tallies.find(check.id);
    if (it == result.tallies.end()) continue;
    const auto& t = it->second;
    theorems[check.id] = {{"mode", to_string(check.mode)},
                          {"applicable", t.applicable},
                          {"pass", t.pass},
                          {"fail", t.fail},
                          {"not_applicable", t.not_applicable}};
  }
  out.push_back({{"summary",
                  {{"instances", result.instances},
                   {"theorems", theorems},
                   {"assert_failures", result.assert_failures},
                   {"report_only_failures", result.report_only_failures},
                   {"total_millis", with_timing ? result.total_millis : 0.0}}}});
  return out;
}

}  // namespace annsub
