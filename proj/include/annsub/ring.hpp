#pragma once

// Finite commutative rings Z_{m1} x ... x Z_{mk}, their elements and ideals.
//
// Elements are addressed by a mixed-radix index with the first factor most
// significant, so index order coincides with lexicographic residue order.
// Every ideal of such a ring is a product of ideals d_i Z_{m_i} with d_i | m_i,
// which gives each ideal a canonical divisor tuple.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annsub/error.hpp"

namespace annsub {

struct RingElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

namespace detail {

inline std::vector<std::uint32_t> divisors_of(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

class RingSpec {
 public:
  explicit RingSpec(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw ParseError("ring needs at least one factor");
    std::uint64_t size = 1;
    for (auto m : moduli_) {
      if (m < 2) throw ParseError("ring modulus must be >= 2, got " + std::to_string(m));
      size *= m;
      if (size > (std::uint64_t{1} << 24)) throw ResourceLimitError("ring too large");
    }
    size_ = static_cast<std::uint32_t>(size);
    strides_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * moduli_[i];
  }

  /// Parses `Z12` or `Z4xZ6`.
  static RingSpec parse(std::string_view text) {
    std::vector<std::uint32_t> moduli;
    for (auto part : detail::split(text, 'x')) {
      if (part.size() < 2 || part.front() != 'Z') throw ParseError("invalid ring factor '" + std::string(part) + "'");
      moduli.push_back(detail::parse_uint(part.substr(1), "ring modulus"));
    }
    return RingSpec(std::move(moduli));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) out += 'x';
      out += 'Z' + std::to_string(moduli_[i]);
    }
    return out;
  }

  std::size_t factor_count() const { return moduli_.size(); }
  std::uint32_t modulus(std::size_t i) const { return moduli_[i]; }
  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t residue(RingElement r, std::size_t factor) const {
    return (r.index / strides_[factor]) % moduli_[factor];
  }

  std::vector<std::uint32_t> residues(RingElement r) const {
    std::vector<std::uint32_t> out(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) out[i] = residue(r, i);
    return out;
  }

  RingElement element(std::span<const std::uint32_t> residues) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) idx += (residues[i] % moduli_[i]) * strides_[i];
    return {idx};
  }

  RingElement zero() const { return {0}; }
  RingElement one() const {
    std::uint32_t idx = 0;
    for (auto s : strides_) idx += s;
    return {idx};
  }

  RingElement add(RingElement a, RingElement b) const {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x + y; });
  }
  RingElement mul(RingElement a, RingElement b) const {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x * y; });
  }
  RingElement sub(RingElement a, RingElement b) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      auto m = moduli_[i];
      idx += ((residue(a, i) + m - residue(b, i)) % m) * strides_[i];
    }
    return {idx};
  }

  /// Additive order: lcm over factors of m_i / gcd(r_i, m_i).
  std::uint32_t additive_order(RingElement r) const {
    std::uint32_t ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      auto m = moduli_[i];
      ord = std::lcm(ord, m / std::gcd(residue(r, i), m));
    }
    return ord;
  }

  std::string element_to_string(RingElement r) const {
    if (moduli_.size() == 1) return std::to_string(r.index);
    std::string out = "(";
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(residue(r, i));
    }
    return out + ")";
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.moduli_ == b.moduli_; }

 private:
  template <typename Op>
  RingElement combine(RingElement a, RingElement b, Op op) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      idx += static_cast<std::uint32_t>(op(residue(a, i), residue(b, i)) % moduli_[i]) * strides_[i];
    return {idx};
  }

  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t size_ = 1;
};

/// Ideal of a residue-product ring, stored as its divisor tuple d_i | m_i.
struct Ideal {
  std::vector<std::uint32_t> divisors;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

inline Ideal zero_ideal(const RingSpec& ring) { return {ring.moduli()}; }
inline Ideal unit_ideal(const RingSpec& ring) { return {std::vector<std::uint32_t>(ring.factor_count(), 1)}; }

inline bool contains(const RingSpec& ring, const Ideal& ideal, RingElement r) {
  for (std::size_t i = 0; i < ring.factor_count(); ++i)
    if (ring.residue(r, i) % ideal.divisors[i] != 0) return false;
  return true;
}

/// The single generator (d_1, ..., d_k) of a principal ideal.
inline RingElement generator(const RingSpec& ring, const Ideal& ideal) { return ring.element(ideal.divisors); }

/// aR: component i is generated by gcd(a_i, m_i).
inline Ideal principal_ideal(const RingSpec& ring, RingElement a) {
  Ideal out;
  for (std::size_t i = 0; i < ring.factor_count(); ++i)
    out.divisors.push_back(std::gcd(ring.residue(a, i), ring.modulus(i)));
  return out;
}

inline std::vector<RingElement> elements(const RingSpec& ring, const Ideal& ideal) {
  std::vector<RingElement> out;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    if (contains(ring, ideal, {i})) out.push_back({i});
  return out;
}

inline std::size_t cardinality(const RingSpec& ring, const Ideal& ideal) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) n *= ring.modulus(i) / ideal.divisors[i];
  return n;
}

inline bool is_subset(const Ideal& a, const Ideal& b) {
  // dZ_m ⊆ eZ_m iff e | d
  for (std::size_t i = 0; i < a.divisors.size(); ++i)
    if (a.divisors[i] % b.divisors[i] != 0) return false;
  return true;
}

inline Ideal ideal_product(const RingSpec& ring, const Ideal& a, const Ideal& b) {
  Ideal out{a.divisors};
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    std::uint64_t m = ring.modulus(i);
    out.divisors[i] = static_cast<std::uint32_t>(std::gcd(std::uint64_t{a.divisors[i]} * b.divisors[i], m));
  }
  return out;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  Ideal out{a.divisors};
  for (std::size_t i = 0; i < out.divisors.size(); ++i) out.divisors[i] = std::gcd(a.divisors[i], b.divisors[i]);
  return out;
}

inline Ideal ideal_intersection(const RingSpec& ring, const Ideal& a, const Ideal& b) {
  Ideal out{a.divisors};
  for (std::size_t i = 0; i < out.divisors.size(); ++i)
    out.divisors[i] = std::gcd(std::lcm(a.divisors[i], b.divisors[i]), ring.modulus(i));
  return out;
}

inline Ideal ideal_power(const RingSpec& ring, const Ideal& a, unsigned n) {
  Ideal out = unit_ideal(ring);
  for (unsigned k = 0; k < n; ++k) out = ideal_product(ring, out, a);
  return out;
}

/// Canonicalizes an element set. Throws InvariantError if the set is not an ideal.
inline Ideal ideal_from_elements(const RingSpec& ring, std::span<const RingElement> elems) {
  Ideal out = zero_ideal(ring);
  for (auto r : elems)
    for (std::size_t i = 0; i < ring.factor_count(); ++i) out.divisors[i] = std::gcd(out.divisors[i], ring.residue(r, i));
  if (cardinality(ring, out) != elems.size()) throw InvariantError("element set is not an ideal");
  for (auto r : elems)
    if (!contains(ring, out, r)) throw InvariantError("element set is not an ideal");
  return out;
}

inline bool is_zero(const RingSpec& ring, const Ideal& ideal) { return ideal == zero_ideal(ring); }
inline bool is_unit(const RingSpec& ring, const Ideal& ideal) { return ideal == unit_ideal(ring); }

/// `6Z12` for one factor, `2Z4x3Z6` otherwise; zero components print as `0`.
inline std::string to_string(const RingSpec& ring, const Ideal& ideal) {
  std::string out;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    if (i) out += 'x';
    auto d = ideal.divisors[i];
    auto m = ring.modulus(i);
    if (d == m)
      out += "0";
    else
      out += (d == 1 ? std::string() : std::to_string(d)) + "Z" + std::to_string(m);
  }
  return out;
}

/// All ideals, lexicographic on divisor tuples.
inline std::vector<Ideal> ideals_of(const RingSpec& ring) {
  std::vector<Ideal> out{Ideal{{}}};
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    std::vector<Ideal> next;
    for (const auto& prefix : out)
      for (auto d : detail::divisors_of(ring.modulus(i))) {
        Ideal ext = prefix;
        ext.divisors.push_back(d);
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

inline bool is_nilpotent(const RingSpec& ring, RingElement r) {
  // Powers of r enter a cycle within additive_order(r) steps of reaching zero, if they ever do.
  RingElement power = r;
  for (std::uint32_t k = 0; k <= ring.additive_order(r); ++k) {
    if (power == ring.zero()) return true;
    power = ring.mul(power, r);
  }
  return false;
}

inline Ideal nilradical(const RingSpec& ring) {
  std::vector<RingElement> nil;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    if (is_nilpotent(ring, {i})) nil.push_back({i});
  return ideal_from_elements(ring, nil);
}

inline std::vector<RingElement> idempotents(const RingSpec& ring) {
  std::vector<RingElement> out;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    if (ring.mul({i}, {i}) == RingElement{i}) out.push_back({i});
  return out;
}

/// Z(R) = {r : rs = 0 for some s != 0}; contains 0 for every nonzero ring.
inline std::vector<RingElement> zero_divisors(const RingSpec& ring) {
  std::vector<RingElement> out;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    for (std::uint32_t j = 1; j < ring.size(); ++j)
      if (ring.mul({i}, {j}) == ring.zero()) {
        out.push_back({i});
        break;
      }
  return out;
}

inline bool is_reduced(const RingSpec& ring) { return is_zero(ring, nilradical(ring)); }

/// Brute force over all pairs. Throws PreconditionError for the unit ideal.
inline bool is_prime_ideal(const RingSpec& ring, const Ideal& ideal) {
  if (is_unit(ring, ideal)) throw PreconditionError("whole ring is not prime");
  for (std::uint32_t a = 0; a < ring.size(); ++a) {
    if (contains(ring, ideal, {a})) continue;
    for (std::uint32_t b = 0; b < ring.size(); ++b)
      if (!contains(ring, ideal, {b}) && contains(ring, ideal, ring.mul({a}, {b}))) return false;
  }
  return true;
}

inline std::vector<Ideal> prime_ideals(const RingSpec& ring) {
  std::vector<Ideal> out;
  for (auto& ideal : ideals_of(ring))
    if (!is_unit(ring, ideal) && is_prime_ideal(ring, ideal)) out.push_back(ideal);
  return out;
}

inline std::vector<Ideal> maximal_ideals(const RingSpec& ring) {
  auto all = ideals_of(ring);
  std::vector<Ideal> out;
  for (auto& ideal : all) {
    if (is_unit(ring, ideal)) continue;
    bool maximal = std::none_of(all.begin(), all.end(), [&](const Ideal& other) {
      return other != ideal && !is_unit(ring, other) && is_subset(ideal, other);
    });
    if (maximal) out.push_back(ideal);
  }
  return out;
}

/// Inclusion-minimal prime ideals.
inline std::vector<Ideal> min_primes(const RingSpec& ring) {
  auto primes = prime_ideals(ring);
  std::vector<Ideal> out;
  for (auto& p : primes) {
    bool minimal =
        std::none_of(primes.begin(), primes.end(), [&](const Ideal& q) { return q != p && is_subset(q, p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

inline bool is_local(const RingSpec& ring) { return maximal_ideals(ring).size() == 1; }
inline bool is_domain(const RingSpec& ring) { return is_prime_ideal(ring, zero_ideal(ring)); }
inline bool is_field(const RingSpec& ring) { return ideals_of(ring).size() == 2; }

/// Ann(I) = {r : rI = 0}.
inline Ideal annihilator(const RingSpec& ring, const Ideal& ideal) {
  auto g = generator(ring, ideal);
  std::vector<RingElement> ann;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    if (ring.mul({i}, g) == ring.zero()) ann.push_back({i});
  return ideal_from_elements(ring, ann);
}

/// Whether the element set equals Ann(I) for some nonzero ideal I (proper I only, if requested).
inline std::optional<Ideal> annihilator_witness(const RingSpec& ring, std::span<const RingElement> set,
                                                bool proper_only = false) {
  std::vector<RingElement> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& ideal : ideals_of(ring)) {
    if (is_zero(ring, ideal) || (proper_only && is_unit(ring, ideal))) continue;
    if (elements(ring, annihilator(ring, ideal)) == sorted) return ideal;
  }
  return std::nullopt;
}

inline bool is_annihilator_ideal(const RingSpec& ring, std::span<const RingElement> set, bool proper_only = false) {
  return annihilator_witness(ring, set, proper_only).has_value();
}

}  // namespace annsub
