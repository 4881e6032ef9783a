#pragma once

#include <cstdint>
#include <string>

namespace testsupport {

/// Outcome of one randomized property run: cases tried and the first
/// counterexample, if any.
struct PropertyRun {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

/// Node count equals the number of distinct non-empty prefixes, and
/// every inserted sequence is found again.
PropertyRun prop_prefix_sharing(int cases, std::uint64_t seed);

/// Chain order and validity track a list model under random inserts and
/// branch invalidations; valid answers are exactly the reachable ones.
PropertyRun prop_chain_model(int cases, std::uint64_t seed);

/// After completion the chain holds only valid answers, in order.
PropertyRun prop_completion_purges(int cases, std::uint64_t seed);

/// A consumer parked on a leaf that was later invalidated resumes at the
/// next valid answer in insertion order.
PropertyRun prop_stale_consumer(int cases, std::uint64_t seed);

}  // namespace testsupport
