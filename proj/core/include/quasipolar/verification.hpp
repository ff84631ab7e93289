#pragma once

#include <string>
#include <vector>

#include "quasipolar/antichain.hpp"
#include "quasipolar/perm_group.hpp"

namespace quasipolar {

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;  // checked range on success, witness on failure
};

struct VerifyConfig {
  GroupKind kind = GroupKind::affine;
  int n_max = 12;
  bool check = true;  // include brute-force cross-validations
  ScanOptions options{};
};

/// Runs every invariant for the chosen group family over all even n up to
/// n_max. Expensive properties stop at their own size limits.
std::vector<PropertyResult> verify_properties(const VerifyConfig& config);

}  // namespace quasipolar
