#include "ibox/sweep.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ibox/arrows.hpp"
#include "ibox/relations.hpp"

namespace ibox {

void SweepSummary::merge(const SweepSummary& o) {
  chains += o.chains;
  moves += o.moves;
  transpositions += o.transpositions;
  mutations += o.mutations;
  failures += o.failures;
  tsystem_checks += o.tsystem_checks;
  tsystem_mismatches += o.tsystem_mismatches;
  mirror_checks += o.mirror_checks;
  mirror_mismatches += o.mirror_mismatches;
  families += o.families;
  vertical_boxes += o.vertical_boxes;
  vertical_mismatches += o.vertical_mismatches;
  structural_failures += o.structural_failures;
  max_vertical_weight = std::max(max_vertical_weight, o.max_vertical_weight);
  for (const auto& [k, v] : o.branch_hits) branch_hits[k] += v;
  for (const auto& [k, v] : o.context_hits) context_hits[k] += v;
  if (first_failure.empty()) first_failure = o.first_failure;
}

bool SweepSummary::clean() const {
  return failures == 0 && tsystem_mismatches == 0 && mirror_mismatches == 0 && vertical_mismatches == 0 &&
         structural_failures == 0;
}

namespace {

SweepSummary check_chain(const AdmissibleChain& chain, const CartanMatrix& cartan) {
  SweepSummary out;
  out.chains = 1;
  for (int k = 1; k < chain.length(); ++k) {
    if (!is_movable(chain, k)) continue;
    ++out.moves;
    ConsistencyReport r = verify_boxmove_mutation(chain, cartan, k);
    (r.kind == MoveKind::Mutation ? out.mutations : out.transpositions) += 1;
    if (r.verdict == Verdict::Fail) {
      ++out.failures;
      if (out.first_failure.empty()) {
        out.first_failure = "chain " + chain.spec().to_string() + " k=" + std::to_string(k) + ": " + r.message;
      }
    }
    if (r.side == TSystemSide::DropLeft) {
      ++out.tsystem_checks;
      if (!r.tsystem_ok) ++out.tsystem_mismatches;
    } else if (r.side == TSystemSide::DropRight) {
      ++out.mirror_checks;
      if (!r.tsystem_ok) ++out.mirror_mismatches;
    }
  }
  return out;
}

SweepSummary check_family(const Family& family, const CartanMatrix& cartan) {
  SweepSummary out;
  out.families = 1;
  const ExchangeMatrix m = exchange_matrix(family, cartan);
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m.at(s, t) > 0 && m.color(s) != m.color(t)) {
        out.max_vertical_weight = std::max(out.max_vertical_weight, m.d(s) * m.at(s, t));
      }
    }
  }
  for (std::size_t idx : m.exchangeable()) {
    const IBox& box = m.box(idx);
    ++out.vertical_boxes;
    const VerticalReport report = classify_vertical(family, cartan, box);
    ++out.context_hits[name(report.context)];
    const std::vector<VerticalSets> actual = vertical_sets(m, cartan, box);
    bool agree = actual.size() == report.colors.size();
    for (std::size_t k = 0; k < report.colors.size(); ++k) {
      const ColorReport& c = report.colors[k];
      ++out.branch_hits[branch_key(report.context, c.branch)];
      if (!c.diagnostics.empty()) {
        ++out.structural_failures;
        if (out.first_failure.empty()) {
          out.first_failure = "box " + box.to_string() + " color " + std::to_string(c.color) + " (" +
                              symbol(report.context) + ":" + c.branch + "): " + c.diagnostics.front();
        }
      }
      if (agree && (plain(family, c.vin) != actual[k].vin || plain(family, c.vout) != actual[k].vout)) agree = false;
    }
    if (!agree) {
      ++out.vertical_mismatches;
      if (out.first_failure.empty()) {
        out.first_failure = "box " + box.to_string() + ": classified vertical sets differ from the matrix";
      }
    }
  }
  return out;
}

// An exception on one item is a failure of that item, not of the sweep.
template <typename Item, typename Fn>
SweepSummary guarded(const Item& item, Fn& fn) {
  try {
    return fn(item);
  } catch (const std::exception& e) {
    SweepSummary out;
    out.failures = 1;
    out.first_failure = e.what();
    return out;
  }
}

template <typename Item, typename Fn>
SweepSummary reduce(const std::vector<Item>& items, Fn fn, bool parallel, int workers) {
  std::vector<SweepSummary> parts(items.size());
  const long n = static_cast<long>(items.size());
  if (parallel) {
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long k = 0; k < n; ++k) parts[k] = guarded(items[k], fn);
  } else {
    for (long k = 0; k < n; ++k) parts[k] = guarded(items[k], fn);
  }
  SweepSummary total;
  for (const SweepSummary& p : parts) total.merge(p);
  return total;
}

SweepSummary sweep(const SequencePtr& seq, const CartanMatrix& cartan, Interval range, bool parallel, int workers) {
  const auto chains = enumerate_chains(seq, range);
  const auto families = enumerate_maximal_families(seq, range);
  SweepSummary total =
      reduce(chains, [&](const AdmissibleChain& c) { return check_chain(c, cartan); }, parallel, workers);
  total.merge(reduce(families, [&](const Family& f) { return check_family(f, cartan); }, parallel, workers));
  return total;
}

}  // namespace

SweepSummary sweep_verify(const SequencePtr& seq, const CartanMatrix& cartan, Interval range, int workers) {
  return sweep(seq, cartan, range, true, workers);
}

SweepSummary sweep_verify_serial(const SequencePtr& seq, const CartanMatrix& cartan, Interval range) {
  return sweep(seq, cartan, range, false, 0);
}

}  // namespace ibox
