// Fairness properties of committees and exhaustive probes for the two
// monotonicity notions.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/model.hpp"
#include "mapr/rational.hpp"
#include "mapr/solvers.hpp"

namespace mapr {

// A value with strictly larger target share got strictly fewer seats than a
// value with smaller share of the same attribute.
struct NonReversalViolation {
  std::size_t attribute;
  std::size_t value_preferred;  // larger target share, fewer seats
  std::size_t value_overtaking;
};

inline std::vector<NonReversalViolation> check_non_reversal(const TargetDistribution& target,
                                                            const RepresentationVector& rep) {
  if (target.entries.size() != rep.counts.size())
    throw SchemaError("target and representation cover different attribute counts");
  std::vector<NonReversalViolation> out;
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    if (target.entries[i].size() != rep.counts[i].size())
      throw SchemaError("target and representation disagree on the domain of attribute " +
                        std::to_string(i));
    for (std::size_t a = 0; a < target.entries[i].size(); ++a)
      for (std::size_t b = 0; b < target.entries[i].size(); ++b)
        if (target.at(i, a) > target.at(i, b) && rep.seats(i, a) < rep.seats(i, b))
          out.push_back({i, a, b});
  }
  return out;
}

// A value's seat count left the interval [floor(k pi), ceil(k pi)].
struct QuotaViolation {
  std::size_t attribute;
  std::size_t value;
  int seats;
  BigInt lower, upper;
};

inline std::vector<QuotaViolation> check_quota(const TargetDistribution& target,
                                               const RepresentationVector& rep) {
  if (target.entries.size() != rep.counts.size())
    throw SchemaError("target and representation cover different attribute counts");
  std::vector<QuotaViolation> out;
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    if (target.entries[i].size() != rep.counts[i].size())
      throw SchemaError("target and representation disagree on the domain of attribute " +
                        std::to_string(i));
    for (std::size_t j = 0; j < target.entries[i].size(); ++j) {
      Rat claim = Rat(rep.k) * target.at(i, j);
      BigInt lower = rat_floor(claim);
      BigInt upper = rat_ceil(claim);
      if (BigInt(rep.seats(i, j)) < lower || BigInt(rep.seats(i, j)) > upper)
        out.push_back({i, j, rep.seats(i, j), lower, upper});
    }
  }
  return out;
}

struct PopulationMonotonicityResult {
  bool holds = true;
  std::optional<Committee> witness;  // optimal under the larger share, undominated
  Rat witness_share;                 // its share of the probed value
  Rat floor_share;                   // smallest share among optima for the reduced target
};

namespace detail {

inline SolveReport all_optima(const Instance& inst, LossKind kind, const SolveLimits& limits) {
  SolveReport r = brute_force(inst, kind, true, limits);
  if (r.optima_truncated)
    throw ResourceError("optimum enumeration truncated at " + std::to_string(limits.max_optima) +
                        "; the probe needs every optimum");
  return r;
}

}  // namespace detail

// Tests whether lowering the probed value's target share can raise its
// representation. `reduced` must differ from the instance target only in
// the probed attribute, keep the ratios of the other values, and strictly
// lower the probed entry. A violation is an optimal committee for the
// larger share whose seat share of the value is below every optimum for the
// reduced share.
inline PopulationMonotonicityResult population_monotonicity_probe(
    const Instance& inst, const TargetDistribution& reduced, std::size_t attribute,
    std::size_t value, LossKind kind, const SolveLimits& limits = {}) {
  const TargetDistribution& full = inst.target;
  reduced.validate();
  reduced.check_schema(inst.db.schema);
  if (attribute >= full.entries.size()) throw SchemaError("attribute index out of range");
  if (value >= full.entries[attribute].size()) throw SchemaError("value index out of range");

  if (!(full.at(attribute, value) > reduced.at(attribute, value)))
    throw PreconditionError("the probed entry must strictly decrease");
  for (std::size_t i = 0; i < full.entries.size(); ++i) {
    if (i == attribute) continue;
    if (full.entries[i] != reduced.entries[i])
      throw PreconditionError("only the probed attribute may change");
  }
  for (std::size_t a = 0; a < full.entries[attribute].size(); ++a)
    for (std::size_t b = 0; b < full.entries[attribute].size(); ++b) {
      if (a == value || b == value) continue;
      if (full.at(attribute, a) * reduced.at(attribute, b) !=
          full.at(attribute, b) * reduced.at(attribute, a))
        throw PreconditionError("the other entries must keep their ratios");
    }

  SolveReport opt_full = detail::all_optima(inst, kind, limits);
  SolveReport opt_reduced =
      detail::all_optima(Instance(inst.db, reduced, inst.k), kind, limits);

  std::optional<int> floor_seats;
  for (const Committee& b : opt_reduced.committees) {
    int s = representation_vector(inst.db, b).seats(attribute, value);
    if (!floor_seats || s < *floor_seats) floor_seats = s;
  }

  PopulationMonotonicityResult result;
  result.floor_share = Rat(*floor_seats, inst.k);
  for (const Committee& a : opt_full.committees) {
    int s = representation_vector(inst.db, a).seats(attribute, value);
    if (s < *floor_seats) {
      result.holds = false;
      result.witness = a;
      result.witness_share = Rat(s, inst.k);
      break;
    }
  }
  return result;
}

struct HouseMonotonicityResult {
  bool holds = true;
  std::optional<Committee> witness;  // optimal at k, dominated by no optimum at k_large
  int k_small = 0, k_large = 0;
};

// Tests whether growing the committee can shrink some value's
// representation. Holds when every optimum at the instance size is
// dominated, value by value, by some optimum at k_large: in seat counts by
// default, in fractions r = seats/k when compare_fractions is set.
inline HouseMonotonicityResult house_monotonicity_probe(const Instance& inst, int k_large,
                                                        LossKind kind,
                                                        bool compare_fractions = false,
                                                        const SolveLimits& limits = {}) {
  if (k_large <= inst.k)
    throw PreconditionError("the larger house must exceed the instance size " +
                            std::to_string(inst.k));
  if (static_cast<std::size_t>(k_large) > inst.db.size())
    throw PreconditionError("the larger house exceeds the database size");

  SolveReport opt_small = detail::all_optima(inst, kind, limits);
  SolveReport opt_large =
      detail::all_optima(Instance(inst.db, inst.target, k_large), kind, limits);

  std::vector<RepresentationVector> reps_large;
  reps_large.reserve(opt_large.committees.size());
  for (const Committee& b : opt_large.committees)
    reps_large.push_back(representation_vector(inst.db, b));

  HouseMonotonicityResult result;
  result.k_small = inst.k;
  result.k_large = k_large;
  for (const Committee& a : opt_small.committees) {
    RepresentationVector rep_a = representation_vector(inst.db, a);
    bool dominated = false;
    for (const RepresentationVector& rep_b : reps_large) {
      bool ok = true;
      for (std::size_t i = 0; i < rep_a.counts.size() && ok; ++i)
        for (std::size_t j = 0; j < rep_a.counts[i].size() && ok; ++j) {
          if (compare_fractions)
            ok = rep_b.fraction(i, j) >= rep_a.fraction(i, j);
          else
            ok = rep_b.seats(i, j) >= rep_a.seats(i, j);
        }
      if (ok) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      result.holds = false;
      result.witness = a;
      break;
    }
  }
  return result;
}

}  // namespace mapr
