#pragma once

// Finite R-modules presented as direct sums of cyclic groups, one group of
// summands per ring factor. Factor i of the ring acts on its own summands
// through the i-th residue; other factors act as zero there.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annsub/error.hpp"
#include "annsub/ring.hpp"

namespace annsub {

inline constexpr std::size_t kDefaultMaxElements = 1024;

struct ModuleElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const ModuleElement&, const ModuleElement&) = default;
};

class ModuleSpec {
 public:
  struct Summand {
    std::size_t factor;
    std::uint32_t order;
  };

  /// `groups[i]` lists the cyclic orders acted on by ring factor i. Orders of 1
  /// are dropped; the zero module is rejected.
  ModuleSpec(RingSpec ring, std::vector<std::vector<std::uint32_t>> groups,
             std::size_t max_elements = kDefaultMaxElements)
      : ring_(std::move(ring)) {
    if (groups.size() != ring_.factor_count())
      throw ParseError("module has " + std::to_string(groups.size()) + " groups but ring has " +
                       std::to_string(ring_.factor_count()) + " factors");
    groups_.resize(groups.size());
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (auto d : groups[i]) {
        if (d == 0) throw ParseError("cyclic order must be >= 1");
        if (ring_.modulus(i) % d != 0)
          throw ParseError("cyclic order " + std::to_string(d) + " does not divide " + std::to_string(ring_.modulus(i)));
        if (d == 1) continue;
        groups_[i].push_back(d);
        summands_.push_back({i, d});
        size *= d;
        if (size > max_elements)
          throw ResourceLimitError("module exceeds element bound " + std::to_string(max_elements));
      }
    }
    if (size == 1) throw ParseError("zero module is not allowed");
    size_ = static_cast<std::uint32_t>(size);
    strides_.assign(summands_.size(), 1);
    for (std::size_t j = summands_.size(); j-- > 1;) strides_[j - 1] = strides_[j] * summands_[j].order;
    build_tables();
  }

  /// Parses `2,3` or `4,2;6` against `ring`; group `1` denotes a zero group.
  static ModuleSpec parse(const RingSpec& ring, std::string_view text,
                          std::size_t max_elements = kDefaultMaxElements) {
    std::vector<std::vector<std::uint32_t>> groups;
    for (auto group : detail::split(text, ';')) {
      auto& orders = groups.emplace_back();
      for (auto part : detail::split(group, ',')) orders.push_back(detail::parse_uint(part, "cyclic order"));
    }
    return ModuleSpec(ring, std::move(groups), max_elements);
  }

  /// R as a module over itself.
  static ModuleSpec regular(const RingSpec& ring, std::size_t max_elements = kDefaultMaxElements) {
    std::vector<std::vector<std::uint32_t>> groups;
    for (auto m : ring.moduli()) groups.push_back({m});
    return ModuleSpec(ring, std::move(groups), max_elements);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      if (i) out += ';';
      if (groups_[i].empty()) out += '1';
      for (std::size_t j = 0; j < groups_[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(groups_[i][j]);
      }
    }
    return out;
  }

  const RingSpec& ring() const { return ring_; }
  const std::vector<std::vector<std::uint32_t>>& groups() const { return groups_; }
  const std::vector<Summand>& summands() const { return summands_; }
  std::uint32_t size() const { return size_; }
  ModuleElement zero() const { return {0}; }

  std::uint32_t coordinate(ModuleElement x, std::size_t summand) const {
    return (x.index / strides_[summand]) % summands_[summand].order;
  }

  std::vector<std::uint32_t> coordinates(ModuleElement x) const {
    std::vector<std::uint32_t> out(summands_.size());
    for (std::size_t j = 0; j < summands_.size(); ++j) out[j] = coordinate(x, j);
    return out;
  }

  ModuleElement element(std::span<const std::uint32_t> coords) const {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < summands_.size(); ++j) idx += (coords[j] % summands_[j].order) * strides_[j];
    return {idx};
  }

  /// Unit vectors of the cyclic summands; they generate M.
  std::vector<ModuleElement> generators() const {
    std::vector<ModuleElement> out;
    for (std::size_t j = 0; j < summands_.size(); ++j) out.push_back({strides_[j]});
    return out;
  }

  ModuleElement add(ModuleElement x, ModuleElement y) const { return {tables_->add[x.index * size_ + y.index]}; }
  ModuleElement act(RingElement r, ModuleElement x) const { return {tables_->act[r.index * size_ + x.index]}; }

  std::string element_to_string(ModuleElement x) const {
    std::string out = "(";
    for (std::size_t j = 0; j < summands_.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(coordinate(x, j));
    }
    return out + ")";
  }

  friend bool operator==(const ModuleSpec& a, const ModuleSpec& b) {
    return a.ring_ == b.ring_ && a.groups_ == b.groups_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> act;
  };

  void build_tables() {
    auto tables = std::make_shared<Tables>();
    const std::size_t n = size_;
    std::vector<std::vector<std::uint32_t>> coords(n);
    for (std::uint32_t x = 0; x < n; ++x) coords[x] = coordinates({x});
    tables->add.resize(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        std::uint32_t idx = 0;
        for (std::size_t j = 0; j < summands_.size(); ++j)
          idx += ((coords[x][j] + coords[y][j]) % summands_[j].order) * strides_[j];
        tables->add[x * n + y] = idx;
      }
    tables->act.resize(std::size_t{ring_.size()} * n);
    for (std::uint32_t r = 0; r < ring_.size(); ++r) {
      auto res = ring_.residues({r});
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t idx = 0;
        for (std::size_t j = 0; j < summands_.size(); ++j) {
          auto d = summands_[j].order;
          idx += static_cast<std::uint32_t>((std::uint64_t{res[summands_[j].factor]} * coords[x][j]) % d) * strides_[j];
        }
        tables->act[std::size_t{r} * n + x] = idx;
      }
    }
    tables_ = std::move(tables);
  }

  RingSpec ring_;
  std::vector<std::vector<std::uint32_t>> groups_;
  std::vector<Summand> summands_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t size_ = 1;
  std::shared_ptr<const Tables> tables_;
};

/// Ann_R(x) = {r : r x = 0}.
inline Ideal element_annihilator(const ModuleSpec& module, ModuleElement x) {
  std::vector<RingElement> ann;
  for (std::uint32_t r = 0; r < module.ring().size(); ++r)
    if (module.act({r}, x) == module.zero()) ann.push_back({r});
  return ideal_from_elements(module.ring(), ann);
}

/// Z(M) = {r : r m = 0 for some m != 0}, by brute force over R x M.
inline std::vector<RingElement> z_of_module(const ModuleSpec& module) {
  if (module.size() <= 1) throw PreconditionError("Z(M) undefined for trivial module");
  std::vector<RingElement> out;
  for (std::uint32_t r = 0; r < module.ring().size(); ++r)
    for (std::uint32_t x = 1; x < module.size(); ++x)
      if (module.act({r}, {x}) == module.zero()) {
        out.push_back({r});
        break;
      }
  return out;
}

/// Ass(M): prime ideals of the form Ann(m), m != 0. Sorted, unique.
inline std::vector<Ideal> ass(const ModuleSpec& module) {
  std::vector<Ideal> anns;
  for (std::uint32_t x = 1; x < module.size(); ++x) anns.push_back(element_annihilator(module, {x}));
  std::sort(anns.begin(), anns.end());
  anns.erase(std::unique(anns.begin(), anns.end()), anns.end());
  std::vector<Ideal> out;
  for (auto& a : anns)
    if (!is_unit(module.ring(), a) && is_prime_ideal(module.ring(), a)) out.push_back(a);
  return out;
}

}  // namespace annsub
