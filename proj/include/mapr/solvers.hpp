// Exact solvers: exhaustive search and the full-supply shortcut.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapr/apportionment.hpp"
#include "mapr/errors.hpp"
#include "mapr/model.hpp"
#include "mapr/scaled_loss.hpp"

namespace mapr {

struct SolveLimits {
  std::int64_t max_nodes = 50'000'000;
  int max_optima = 100'000;
  std::size_t max_buckets = 4096;
};

struct SwapRecord {
  std::vector<int> removed;
  std::vector<int> added;
  Rat loss_after;
};

struct SolveTrace {
  std::int64_t nodes_expanded = 0;
  std::int64_t swaps_examined = 0;
  std::int64_t iterations = 0;  // accepted swaps
  std::vector<SwapRecord> accepted;
};

struct SolveReport {
  std::vector<Committee> committees;
  Rat loss_value;
  std::string algorithm;
  bool feasible = true;
  bool optima_truncated = false;
  bool iteration_limit_hit = false;
  std::optional<std::uint64_t> seed;
  SolveTrace trace;
};

namespace detail {

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Reported losses always go through the rational path once more; a mismatch
// with the scaled integer engine is a programming error, not bad input.
inline void check_reported_loss(const Instance& inst, LossKind kind, const SolveReport& report) {
  for (const Committee& c : report.committees) {
    Rat direct = loss(kind, inst.target, representation_vector(inst.db, c));
    if (direct != report.loss_value)
      throw std::logic_error("loss engine mismatch: " + to_string(direct) + " vs " +
                             to_string(report.loss_value));
  }
}

}  // namespace detail

// Exhaustive search over all committees of size k, lexicographic order.
// With want_all every optimal committee is returned (up to
// limits.max_optima, flagged when truncated); otherwise only the
// lexicographically first. The full enumeration C(m, k) must fit the node
// budget up front.
inline SolveReport brute_force(const Instance& inst, LossKind kind, bool want_all = false,
                               const SolveLimits& limits = {}) {
  const int m = static_cast<int>(inst.db.size());
  const int k = inst.k;
  if (detail::binomial(m, k) > limits.max_nodes)
    throw ResourceError("brute force would enumerate " + detail::binomial(m, k).str() +
                        " committees; the budget is " + std::to_string(limits.max_nodes));

  ScaledLossEvaluator eval(inst.db, inst.target, k);
  CountTally tally(inst.db);
  SolveReport report;
  report.algorithm = "brute";

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  std::optional<BigInt> best;

  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      ++report.trace.nodes_expanded;
      BigInt value = eval.scaled_loss(tally, kind);
      if (!best || value < *best) {
        best = value;
        report.committees.clear();
        report.optima_truncated = false;
        report.committees.emplace_back(chosen);
      } else if (want_all && value == *best) {
        if (static_cast<int>(report.committees.size()) < limits.max_optima)
          report.committees.emplace_back(chosen);
        else
          report.optima_truncated = true;
      }
      return;
    }
    const int missing = k - static_cast<int>(chosen.size());
    for (int c = next; c <= m - missing; ++c) {
      chosen.push_back(c);
      tally.add(c);
      self(self, c + 1);
      tally.remove(c);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  report.loss_value = eval.to_loss(*best);
  detail::check_reported_loss(inst, kind, report);
  return report;
}

// True when every value vector of the full cross-product domain is held by
// at least k candidates.
inline bool full_supply_check(const CandidateDatabase& db, int k) {
  if (k < 1) throw DomainError("committee size must be at least 1");
  BigInt domain = 1;
  for (std::size_t i = 0; i < db.schema.attribute_count(); ++i)
    domain *= static_cast<int>(db.schema.domain_size(i));
  if (domain * k > BigInt(db.size())) return false;

  std::map<std::vector<int>, int> seen;
  for (const auto& c : db.candidates) ++seen[c.values];
  if (BigInt(seen.size()) != domain) return false;
  for (const auto& [vec, count] : seen)
    if (count < k) return false;
  return true;
}

// Optimal committee under full supply: apportion each attribute's seats
// independently with the Hare quota, pair the seat lists slot by slot into
// value vectors, and fill each slot with a distinct candidate holding that
// vector. The result minimises all three loss measures at once; kind only
// selects which of them the report states.
inline SolveReport solve_full_supply(const Instance& inst, LossKind kind = LossKind::L1) {
  if (!full_supply_check(inst.db, inst.k))
    throw PreconditionError("database does not have full supply for k=" +
                            std::to_string(inst.k));

  const std::size_t p = inst.db.schema.attribute_count();
  std::vector<std::vector<int>> slot_value(p);
  for (std::size_t i = 0; i < p; ++i) {
    ApportionmentResult seats = largest_remainder(inst.target.entries[i], inst.k);
    for (std::size_t j = 0; j < seats.canonical.size(); ++j)
      for (int s = 0; s < seats.canonical[j]; ++s)
        slot_value[i].push_back(static_cast<int>(j));
  }

  std::map<std::vector<int>, std::vector<int>> pool;  // value vector -> unused candidates
  for (std::size_t c = inst.db.size(); c-- > 0;)
    pool[inst.db.candidates[c].values].push_back(static_cast<int>(c));

  std::vector<int> members;
  for (int slot = 0; slot < inst.k; ++slot) {
    std::vector<int> vec(p);
    for (std::size_t i = 0; i < p; ++i) vec[i] = slot_value[i][static_cast<std::size_t>(slot)];
    auto it = pool.find(vec);
    if (it == pool.end() || it->second.empty())
      throw SupplyError("no unused candidate left for a required value vector");
    members.push_back(it->second.back());
    it->second.pop_back();
  }

  SolveReport report;
  report.algorithm = "fs";
  report.committees.emplace_back(std::move(members));
  report.trace.nodes_expanded = inst.k;
  report.loss_value =
      loss(kind, inst.target, representation_vector(inst.db, report.committees[0]));
  return report;
}

}  // namespace mapr
