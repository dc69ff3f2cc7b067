// Solvers that branch over distinct value vectors (buckets) instead of
// individual candidates. The bucket count depends only on the attribute
// structure, so these stay fast when the database is large but repetitive.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/scaled_loss.hpp"
#include "mapr/solvers.hpp"

namespace mapr {

struct BucketTable {
  // Parallel arrays, ordered by multiplicity descending, then value vector.
  std::vector<std::vector<int>> vectors;
  std::vector<int> multiplicity;
  std::vector<std::vector<int>> members;  // candidate indices, ascending

  static BucketTable build(const CandidateDatabase& db) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (std::size_t c = 0; c < db.size(); ++c)
      groups[db.candidates[c].values].push_back(static_cast<int>(c));

    std::vector<const std::pair<const std::vector<int>, std::vector<int>>*> order;
    order.reserve(groups.size());
    for (const auto& g : groups) order.push_back(&g);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      return a->second.size() > b->second.size();
    });

    BucketTable table;
    for (auto* g : order) {
      table.vectors.push_back(g->first);
      table.multiplicity.push_back(static_cast<int>(g->second.size()));
      table.members.push_back(g->second);
    }
    return table;
  }

  std::size_t size() const { return vectors.size(); }
};

namespace detail {

struct BucketSearchState {
  const Instance* inst;
  BucketTable table;
  // suffix_cap[t][flat(i,j)]: candidates with value j on attribute i among
  // buckets t..end. suffix_total[t]: candidates among buckets t..end.
  std::vector<std::vector<int>> suffix_cap;
  std::vector<int> suffix_total;
  std::vector<std::size_t> attr_offset;
  std::size_t total_values = 0;

  explicit BucketSearchState(const Instance& instance) : inst(&instance) {
    table = BucketTable::build(instance.db);
    const AttributeSchema& schema = instance.db.schema;
    for (std::size_t i = 0; i < schema.attribute_count(); ++i) {
      attr_offset.push_back(total_values);
      total_values += schema.domain_size(i);
    }
    const std::size_t t = table.size();
    suffix_cap.assign(t + 1, std::vector<int>(total_values, 0));
    suffix_total.assign(t + 1, 0);
    for (std::size_t b = t; b-- > 0;) {
      suffix_cap[b] = suffix_cap[b + 1];
      suffix_total[b] = suffix_total[b + 1] + table.multiplicity[b];
      for (std::size_t i = 0; i < attr_offset.size(); ++i)
        suffix_cap[b][attr_offset[i] + static_cast<std::size_t>(table.vectors[b][i])] +=
            table.multiplicity[b];
    }
  }

  std::size_t flat(std::size_t i, int j) const {
    return attr_offset[i] + static_cast<std::size_t>(j);
  }

  Committee materialize(const std::vector<int>& taken) const {
    std::vector<int> members;
    for (std::size_t b = 0; b < table.size(); ++b)
      for (int s = 0; s < taken[b]; ++s) members.push_back(table.members[b][static_cast<std::size_t>(s)]);
    return Committee(std::move(members));
  }
};

}  // namespace detail

// Decides whether some committee matches the target exactly. A target that
// is not natural for k is immediately infeasible. Otherwise a depth-first
// search assigns seats to buckets against the integer demand k * pi,
// propagating per-value demand and capacity bounds.
inline SolveReport perfect_committee(const Instance& inst, const SolveLimits& limits = {}) {
  SolveReport report;
  report.algorithm = "perfect";
  report.loss_value = Rat(0);

  if (!is_natural(inst.target, inst.k)) {
    report.feasible = false;
    return report;
  }

  detail::BucketSearchState st(inst);
  if (st.table.size() > limits.max_buckets)
    throw ResourceError("instance has " + std::to_string(st.table.size()) +
                        " distinct value vectors; the budget is " +
                        std::to_string(limits.max_buckets));

  const std::size_t p = inst.db.schema.attribute_count();
  std::vector<int> demand(st.total_values);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < inst.db.schema.domain_size(i); ++j) {
      Rat seats = Rat(inst.k) * inst.target.at(i, j);
      demand[st.flat(i, static_cast<int>(j))] = static_cast<int>(seats.numerator());
    }

  const std::size_t t = st.table.size();
  std::vector<int> taken(t, 0);

  auto dfs = [&](auto&& self, std::size_t b, int remaining) -> bool {
    if (remaining == 0) return true;
    if (b == t) return false;
    int hi = std::min(st.table.multiplicity[b], remaining);
    int lo = std::max(0, remaining - st.suffix_total[b + 1]);
    for (std::size_t i = 0; i < p; ++i) {
      const std::size_t f = st.flat(i, st.table.vectors[b][i]);
      hi = std::min(hi, demand[f]);
      lo = std::max(lo, demand[f] - st.suffix_cap[b + 1][f]);
    }
    for (int take = hi; take >= lo; --take) {
      if (++report.trace.nodes_expanded > limits.max_nodes)
        throw ResourceError("perfect-committee search exceeded the node budget of " +
                            std::to_string(limits.max_nodes));
      for (std::size_t i = 0; i < p; ++i) demand[st.flat(i, st.table.vectors[b][i])] -= take;
      taken[b] = take;
      if (self(self, b + 1, remaining - take)) return true;
      taken[b] = 0;
      for (std::size_t i = 0; i < p; ++i) demand[st.flat(i, st.table.vectors[b][i])] += take;
    }
    return false;
  };

  if (dfs(dfs, 0, inst.k)) {
    report.committees.push_back(st.materialize(taken));
    if (!is_perfect(inst, report.committees[0]))
      throw std::logic_error("perfect-committee search produced an imperfect committee");
  } else {
    report.feasible = false;
  }
  return report;
}

// Loss-optimal committee by branch and bound over buckets. The bound for a
// partial assignment clamps each value's final seat count to its reachable
// interval and reads the corresponding deviation from the scaled table,
// which never overestimates, so pruning keeps the exact optimum. Buckets
// are processed by multiplicity descending; seat counts are tried high to
// low, and the first optimum found is kept, making the result
// deterministic.
inline SolveReport solve_buckets_optimal(const Instance& inst, LossKind kind,
                                         const SolveLimits& limits = {}) {
  detail::BucketSearchState st(inst);
  if (st.table.size() > limits.max_buckets)
    throw ResourceError("instance has " + std::to_string(st.table.size()) +
                        " distinct value vectors; the budget is " +
                        std::to_string(limits.max_buckets));

  ScaledLossEvaluator eval(inst.db, inst.target, inst.k);
  const std::size_t p = inst.db.schema.attribute_count();
  const std::size_t t = st.table.size();

  std::vector<int> counts(st.total_values, 0);
  std::vector<int> taken(t, 0), best_taken;
  std::optional<BigInt> best;

  // Admissible lower bound on the final loss reachable from bucket b with
  // `remaining` seats still to place.
  auto lower_bound = [&](std::size_t b, int remaining) -> BigInt {
    BigInt total = 0;
    for (std::size_t i = 0; i < p; ++i) {
      BigInt attr_max = 0;
      for (std::size_t j = 0; j < inst.db.schema.domain_size(i); ++j) {
        const std::size_t f = st.flat(i, static_cast<int>(j));
        const int cap = st.suffix_cap[b][f];
        const int lo = counts[f] + std::max(0, remaining - (st.suffix_total[b] - cap));
        const int hi = counts[f] + std::min(remaining, cap);
        int c = eval.best_count(i, j);
        c = std::clamp(c, lo, hi);
        const BigInt& d = eval.deviation(i, j, c);
        switch (kind) {
          case LossKind::L1: total += d; break;
          case LossKind::L1Max:
          case LossKind::LMax:
            if (d > attr_max) attr_max = d;
            break;
        }
      }
      if (kind == LossKind::L1Max) total += attr_max;
      if (kind == LossKind::LMax && attr_max > total) total = attr_max;
    }
    return total;
  };

  std::int64_t report_nodes = 0;
  auto dfs = [&](auto&& self, std::size_t b, int remaining) -> void {
    if (++report_nodes > limits.max_nodes)
      throw ResourceError("bucket search exceeded the node budget of " +
                          std::to_string(limits.max_nodes));
    if (remaining == 0) {
      BigInt value = 0;
      for (std::size_t i = 0; i < p; ++i) {
        BigInt attr_max = 0;
        for (std::size_t j = 0; j < inst.db.schema.domain_size(i); ++j) {
          const BigInt& d = eval.deviation(i, j, counts[st.flat(i, static_cast<int>(j))]);
          switch (kind) {
            case LossKind::L1: value += d; break;
            case LossKind::L1Max:
            case LossKind::LMax:
              if (d > attr_max) attr_max = d;
              break;
          }
        }
        if (kind == LossKind::L1Max) value += attr_max;
        if (kind == LossKind::LMax && attr_max > value) value = attr_max;
      }
      if (!best || value < *best) {
        best = value;
        best_taken = taken;
      }
      return;
    }
    if (b == t) return;
    if (best && lower_bound(b, remaining) >= *best) return;
    const int hi = std::min(st.table.multiplicity[b], remaining);
    const int lo = std::max(0, remaining - st.suffix_total[b + 1]);
    for (int take = hi; take >= lo; --take) {
      for (std::size_t i = 0; i < p; ++i) counts[st.flat(i, st.table.vectors[b][i])] += take;
      taken[b] = take;
      self(self, b + 1, remaining - take);
      taken[b] = 0;
      for (std::size_t i = 0; i < p; ++i) counts[st.flat(i, st.table.vectors[b][i])] -= take;
    }
  };

  dfs(dfs, 0, inst.k);

  SolveReport report;
  report.algorithm = "buckets";
  report.trace.nodes_expanded = report_nodes;
  report.committees.push_back(st.materialize(best_taken));
  report.loss_value = eval.to_loss(*best);
  detail::check_reported_loss(inst, kind, report);
  return report;
}

}  // namespace mapr
