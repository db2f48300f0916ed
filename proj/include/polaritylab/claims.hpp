#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/enumerate.hpp"

namespace polaritylab {

struct ClaimReport {
  std::string id;
  int n_max = 0;
  bool passed = false;
  /// Number of graphs or cases examined.
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  std::string summary;
};

/// UNIPOLAR_LISTS, NINE_THIRTEEN, INF1_LISTS, POLAR_LISTS, SPARSE_COG,
/// CONSTRUCT_AGREE, RECOGNIZERS, DISC_S1, BOUND, DISC_POLAR, SPIDER_NOT_OBS.
const std::vector<std::string_view>& claim_ids();
int default_claim_scale(std::string_view id);

/// Runs the claim's finite instance up to n_max vertices (the claim's default
/// scale when absent). Throws UnknownClaim, CapExceeded.
ClaimReport verify_claim(std::string_view id, std::optional<int> n_max = std::nullopt,
                         Execution exec = Execution::parallel, int cap = kDefaultEnumerationCap);

}  // namespace polaritylab
