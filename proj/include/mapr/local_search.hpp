// Swap-based local search with provable additive guarantees for radius 1
// and 2 on binary attributes with natural targets.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/random.hpp"
#include "mapr/scaled_loss.hpp"
#include "mapr/solvers.hpp"

namespace mapr {

namespace detail {

// Calls fn on every size-s index combination of [0, n), lexicographically.
// fn returns true to stop early.
template <typename Fn>
bool for_each_combination(int n, int s, Fn&& fn) {
  if (s > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(pick)) return true;
    int pos = s - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - s + pos) --pos;
    if (pos < 0) return false;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < s; ++i)
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace detail

struct LocalSearchOptions {
  int radius = 1;  // largest swap size considered
  std::uint64_t seed = 0;
  std::optional<Committee> initial;  // sampled uniformly when absent
  std::int64_t max_iterations = 1'000'000;
};

// Repeatedly applies the first strictly improving swap of up to `radius`
// committee members, scanning swap sizes in increasing order and both sides
// in lexicographic index order, until no swap improves the loss. The scan
// order and the seeded start make runs fully reproducible.
inline SolveReport local_search(const Instance& inst, LossKind kind,
                                const LocalSearchOptions& options = {}) {
  if (options.radius < 1) throw ParameterError("swap radius must be at least 1");
  if (options.max_iterations < 0) throw ParameterError("negative iteration budget");
  const int m = static_cast<int>(inst.db.size());
  const int k = inst.k;

  SolveReport report;
  report.algorithm = "local";
  report.seed = options.seed;

  std::vector<int> members;
  if (options.initial) {
    if (options.initial->size() != k)
      throw SchemaError("initial committee has size " + std::to_string(options.initial->size()) +
                        ", expected " + std::to_string(k));
    for (int c : options.initial->members)
      if (c < 0 || c >= m) throw SchemaError("initial committee member out of range");
    members = options.initial->members;
  } else {
    std::mt19937_64 rng(options.seed);
    members = sample_without_replacement(rng, m, k);
  }

  ScaledLossEvaluator eval(inst.db, inst.target, k);
  CountTally tally(inst.db);
  std::vector<char> inside(static_cast<std::size_t>(m), 0);
  for (int c : members) {
    tally.add(c);
    inside[static_cast<std::size_t>(c)] = 1;
  }
  BigInt current = eval.scaled_loss(tally, kind);

  const int max_size = std::min({options.radius, k, m - k});
  while (current != 0 && max_size > 0) {
    if (report.trace.iterations >= options.max_iterations) {
      report.iteration_limit_hit = true;
      break;
    }
    std::vector<int> outside;
    outside.reserve(static_cast<std::size_t>(m - k));
    for (int c = 0; c < m; ++c)
      if (!inside[static_cast<std::size_t>(c)]) outside.push_back(c);

    bool improved = false;
    for (int s = 1; s <= max_size && !improved; ++s) {
      detail::for_each_combination(k, s, [&](const std::vector<int>& out_pos) {
        return detail::for_each_combination(m - k, s, [&](const std::vector<int>& in_pos) {
          ++report.trace.swaps_examined;
          for (int i : out_pos) tally.remove(members[static_cast<std::size_t>(i)]);
          for (int i : in_pos) tally.add(outside[static_cast<std::size_t>(i)]);
          BigInt value = eval.scaled_loss(tally, kind);
          if (value < current) {
            current = value;
            SwapRecord rec;
            for (int i : out_pos) rec.removed.push_back(members[static_cast<std::size_t>(i)]);
            for (int i : in_pos) rec.added.push_back(outside[static_cast<std::size_t>(i)]);
            rec.loss_after = eval.to_loss(value);
            for (int i : out_pos) inside[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = 0;
            for (int i : in_pos) inside[static_cast<std::size_t>(outside[static_cast<std::size_t>(i)])] = 1;
            members.clear();
            for (int c = 0; c < m; ++c)
              if (inside[static_cast<std::size_t>(c)]) members.push_back(c);
            report.trace.accepted.push_back(std::move(rec));
            ++report.trace.iterations;
            improved = true;
            return true;
          }
          for (int i : in_pos) tally.remove(outside[static_cast<std::size_t>(i)]);
          for (int i : out_pos) tally.add(members[static_cast<std::size_t>(i)]);
          return false;
        });
      });
    }
    if (!improved) break;
  }

  report.committees.emplace_back(std::move(members));
  report.loss_value = eval.to_loss(current);
  detail::check_reported_loss(inst, kind, report);
  return report;
}

struct ApproximationBound {
  std::optional<Rat> exact;  // present when the bound is rational
  double value = 0.0;
};

// Worst-case additive gap of local search over the optimum, for binary
// attributes and natural targets. Radius 1: num_attributes, tight. Radius
// 2: ln(k/2) / (2 ln(k/2) - 1) * (num_attributes + 6 num_attributes / k),
// requiring k >= 4.
inline ApproximationBound approximation_bound(int radius, int num_attributes, int k) {
  if (num_attributes < 0) throw DomainError("negative attribute count");
  ApproximationBound out;
  if (radius == 1) {
    out.exact = Rat(num_attributes);
    out.value = static_cast<double>(num_attributes);
    return out;
  }
  if (radius == 2) {
    if (k < 4) throw DomainError("the radius-2 bound requires k >= 4");
    double x = static_cast<double>(num_attributes);
    double lg = std::log(static_cast<double>(k) / 2.0);
    out.value = lg / (2.0 * lg - 1.0) * (x + 6.0 * x / static_cast<double>(k));
    return out;
  }
  throw ParameterError("no bound is known for radius " + std::to_string(radius));
}

}  // namespace mapr
