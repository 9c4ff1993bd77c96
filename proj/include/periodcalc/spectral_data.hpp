#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periodcalc/half_int.hpp"

namespace periodcalc {

// Archimedean places of the totally real subfield, one of which may be v0.
struct CMShape {
  std::vector<std::string> labels;
  std::optional<std::size_t> v0;

  std::size_t d() const { return labels.size(); }
  void validate() const;

  // Labels "v1".."vd", v0 = first place.
  static CMShape standard(std::size_t d);
};

// Integer highest weight, per place, for both embeddings above it.
struct HighestWeight {
  int n = 0;
  std::vector<std::vector<std::int64_t>> iota;
  std::vector<std::vector<std::int64_t>> iota_bar;
  // Set when the conjugate components were zero-filled rather than supplied.
  bool iota_bar_synthetic = false;

  std::size_t places() const { return iota.size(); }
  bool is_dominant() const;
};

// Per place a strictly decreasing list a_{v,1} > ... > a_{v,n} in Z + (n-1)/2.
struct InfinityType {
  int n = 0;
  std::vector<std::vector<HalfInt>> a;

  std::size_t places() const { return a.size(); }
  const std::vector<HalfInt>& at(std::size_t place) const { return a.at(place); }

  // Throws ParityMismatch or TiedEntries.
  void validate() const;

  static InfinityType from_doubled(int n, const std::vector<std::vector<std::int64_t>>& doubled);
  std::vector<std::vector<std::int64_t>> to_doubled() const;

  // Smallest consecutive gap over all places; 0 when n < 2.
  HalfInt min_gap() const;

  bool operator==(const InfinityType&) const = default;
};

// Harish-Chandra parameter. At the marked place the list holds the unmarked
// entries and `marked` the re-appended distinguished one.
struct HCParameter {
  int n = 0;
  std::vector<std::vector<HalfInt>> entries;
  std::optional<HalfInt> marked;
  std::size_t v0 = 0;

  std::size_t places() const { return entries.size(); }
  // Multiset of all entries at a place, marked slot included, decreasing.
  std::vector<HalfInt> multiset_at(std::size_t place) const;
  void validate() const;

  static HCParameter from_doubled(const std::vector<std::vector<std::int64_t>>& doubled, std::size_t v0);

  // Marks are part of equality; the unmarked lists are compared as multisets.
  bool operator==(const HCParameter& o) const;
};

InfinityType infinity_type_from_weight(const HighestWeight& mu);
HighestWeight weight_from_infinity_type(const InfinityType& a);
bool is_m_regular(const HighestWeight& mu, std::int64_t m);

enum class DualOp { Dual, Conjugate };
InfinityType dual_and_conjugate(const InfinityType& a, DualOp op);

}  // namespace periodcalc
