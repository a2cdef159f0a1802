#pragma once

#include <map>
#include <string>

#include "ibox/cartan.hpp"
#include "ibox/sequence.hpp"

namespace ibox {

struct SweepSummary {
  long chains = 0;
  long moves = 0;
  long transpositions = 0;
  long mutations = 0;
  long failures = 0;

  // Mutations whose dropped box is [x_+,y] (the T-system case) and the
  // mirrored [x,y_-] case.
  long tsystem_checks = 0;
  long tsystem_mismatches = 0;
  long mirror_checks = 0;
  long mirror_mismatches = 0;

  // Vertical-arrow analysis over the distinct families.
  long families = 0;
  long vertical_boxes = 0;
  long vertical_mismatches = 0;
  long structural_failures = 0;
  int max_vertical_weight = 0;
  std::map<std::string, long> branch_hits;
  std::map<std::string, long> context_hits;

  // First failure in chain order, for diagnostics.
  std::string first_failure;

  void merge(const SweepSummary& o);
  bool clean() const;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

// Every chain on `range` times every movable index, plus the vertical
// analysis of every distinct family. Parallel over chains and families;
// results are merged in chain order, so the summary does not depend on the
// worker count. workers <= 0 uses the OpenMP default.
SweepSummary sweep_verify(const SequencePtr& seq, const CartanMatrix& cartan, Interval range, int workers = 0);

// Single-threaded reference with the same contract.
SweepSummary sweep_verify_serial(const SequencePtr& seq, const CartanMatrix& cartan, Interval range);

}  // namespace ibox
