#pragma once

#include <string>
#include <vector>

#include "annsub/annsub.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Model model_of(const annsub::ModuleSpec& m) { return oracle::Model(m.ring().moduli(), m.groups()); }

inline oracle::Elems elems_of(const annsub::SubmoduleLattice& L, annsub::SubmoduleId id) {
  oracle::Elems out;
  for (auto i : L[id].elements.indices()) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

inline oracle::Elems elems_of(const annsub::RingSpec& r, const annsub::Ideal& i) {
  oracle::Elems out;
  for (auto x : annsub::elements(r, i)) out.push_back(x.index);
  std::sort(out.begin(), out.end());
  return out;
}

struct Instance {
  std::string ring, module;
};

inline annsub::ModuleSpec module_of(const Instance& i) {
  return annsub::ModuleSpec::parse(annsub::RingSpec::parse(i.ring), i.module);
}

// Small instances for literal cross-checks: cyclic, non-cyclic, products, fields.
inline const std::vector<Instance>& small_instances() {
  static const std::vector<Instance> v = {
      {"Z2", "2"},      {"Z2", "2,2"},    {"Z2", "2,2,2"}, {"Z3", "3,3"},     {"Z4", "2"},     {"Z4", "4"},
      {"Z4", "2,2"},    {"Z4", "4,2"},    {"Z4", "4,4"},   {"Z5", "5,5"},     {"Z6", "6"},     {"Z6", "2,3"},
      {"Z6", "2,2,3"},  {"Z8", "8"},      {"Z8", "4,2"},   {"Z9", "9"},       {"Z9", "3,3"},   {"Z12", "12"},
      {"Z12", "2,3"},   {"Z12", "2,5"},   {"Z12", "4,3"},  {"Z12", "6,2"},    {"Z16", "16"},   {"Z18", "6,3"},
      {"Z24", "12,2"},  {"Z30", "30"},    {"Z30", "2,15"}, {"Z36", "36"},     {"Z48", "3,8"},  {"Z2xZ2", "2;2"},
      {"Z2xZ3", "2;3"}, {"Z4xZ2", "4;2"}, {"Z2xZ4", "1;4"}, {"Z4xZ6", "2;6"}, {"Z3xZ3", "3,3;3"},
  };
  return v;
}

}  // namespace support
