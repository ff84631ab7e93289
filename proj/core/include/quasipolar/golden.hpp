#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quasipolar/antichain.hpp"

namespace quasipolar {

// Golden file layout (one file per group and modulus):
//
//   n,group,count,cota_num,cota_den
//   canonical_mask_hex,orbit_size,polarity_u,polarity_v
//   ...
//
// The first line carries values, not column names. Masks are lowercase hex,
// zero-padded to ceil(n/4) digits, and rows are sorted by mask.

struct GoldenEntry {
  Mask mask;
  std::size_t orbit_size;
  std::int64_t polarity_u;
  std::int64_t polarity_v;

  friend bool operator==(const GoldenEntry&, const GoldenEntry&) = default;
};

struct GoldenFile {
  std::int64_t n;
  std::string group;
  std::size_t count;
  std::int64_t cota_num;
  std::int64_t cota_den;
  std::vector<GoldenEntry> entries;

  friend bool operator==(const GoldenFile&, const GoldenFile&) = default;
};

std::string mask_hex(Mask mask, int n);

/// Throws std::invalid_argument if a polarity is not an affine map.
GoldenFile make_golden(Modulus n, GroupKind kind, std::span<const CanonicalClass> strong,
                       const Rational& cota);

std::string format_golden(const GoldenFile& file);

/// Throws std::invalid_argument on malformed input.
GoldenFile parse_golden(std::string_view text);

}  // namespace quasipolar
