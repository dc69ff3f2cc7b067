// Largest-remainder seat apportionment and its committee-level uses.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mapr/errors.hpp"
#include "mapr/model.hpp"
#include "mapr/rational.hpp"

namespace mapr {

enum class QuotaKind { Hare, Droop, HagenbachBischoff, Imperiali };

inline std::string to_string(QuotaKind q) {
  switch (q) {
    case QuotaKind::Hare: return "hare";
    case QuotaKind::Droop: return "droop";
    case QuotaKind::HagenbachBischoff: return "hb";
    case QuotaKind::Imperiali: return "imperiali";
  }
  return "";
}

// Integer seats per value, summing to the house size.
using SeatAllocation = std::vector<int>;

struct ApportionmentResult {
  SeatAllocation canonical;
  std::vector<SeatAllocation> all_tied;  // canonical first, then the other tie resolutions
  std::vector<Rat> ideal;                // fractional seat claims s*
  Rat quota_value;
};

// Largest-remainder apportionment of k seats.
//
// Weights may be vote counts or fractions. The quota is computed from the
// raw weight total n: Hare n/k, Droop 1 + n/(1+k), Hagenbach-Bischoff
// n/(1+k), Imperiali n/(2+k). With the Hare quota the claims equal
// k * weight/n, so any rescaling of the weights gives the same result; the
// Droop quota's additive term makes it scale-sensitive, so vote counts are
// the meaningful input there.
//
// Every value gets floor(s*) seats; the remaining seats go to the largest
// remainders. All resolutions of a remainder tie are returned; the
// canonical one prefers lower value indices.
inline ApportionmentResult largest_remainder(const std::vector<Rat>& weights, int k,
                                             QuotaKind quota = QuotaKind::Hare) {
  if (weights.empty()) throw EmptyInputError("no weights");
  if (k < 0) throw DomainError("house size must be nonnegative");
  Rat n(0);
  for (const Rat& w : weights) {
    if (w < Rat(0)) throw DomainError("negative weight");
    n += w;
  }
  if (n == Rat(0)) throw DomainError("weights sum to zero");

  if (k == 0) {
    // No seats to hand out; the quota would be undefined for Hare.
    ApportionmentResult empty;
    empty.canonical.assign(weights.size(), 0);
    empty.all_tied.push_back(empty.canonical);
    empty.ideal.assign(weights.size(), Rat(0));
    return empty;
  }

  Rat q;
  switch (quota) {
    case QuotaKind::Hare: q = n / Rat(k); break;
    case QuotaKind::Droop: q = Rat(1) + n / Rat(1 + k); break;
    case QuotaKind::HagenbachBischoff: q = n / Rat(1 + k); break;
    case QuotaKind::Imperiali: q = n / Rat(2 + k); break;
  }

  const std::size_t p = weights.size();
  ApportionmentResult result;
  result.quota_value = q;
  result.ideal.reserve(p);
  std::vector<int> floors(p);
  std::vector<Rat> remainders(p);
  int assigned = 0;
  for (std::size_t i = 0; i < p; ++i) {
    Rat s = weights[i] / q;
    result.ideal.push_back(s);
    BigInt f = rat_floor(s);
    floors[i] = static_cast<int>(f);
    remainders[i] = s - Rat(f);
    assigned += floors[i];
  }
  if (assigned > k)
    throw OverAllocationError("floor seats already total " + std::to_string(assigned) +
                              " for house size " + std::to_string(k));
  int h = k - assigned;
  if (h > static_cast<int>(p))
    throw DomainError("quota leaves " + std::to_string(h) + " extra seats for " +
                      std::to_string(p) + " values; largest remainders cannot absorb them");

  if (h == 0) {
    result.canonical = floors;
    result.all_tied.push_back(floors);
    return result;
  }

  // Threshold = h-th largest remainder. Everything above it is certain;
  // entries equal to it compete for the leftover seats.
  std::vector<Rat> sorted = remainders;
  std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
  const Rat threshold = sorted[static_cast<std::size_t>(h) - 1];

  std::vector<std::size_t> certain, tied;
  for (std::size_t i = 0; i < p; ++i) {
    if (remainders[i] > threshold) certain.push_back(i);
    else if (remainders[i] == threshold) tied.push_back(i);
  }
  const int need = h - static_cast<int>(certain.size());

  SeatAllocation base = floors;
  for (std::size_t i : certain) ++base[i];

  // Enumerate the need-subsets of the tied indices in lexicographic order;
  // the first subset takes the lowest indices, giving the canonical result.
  std::vector<std::size_t> pick(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  while (true) {
    SeatAllocation alloc = base;
    for (std::size_t idx : pick) ++alloc[tied[idx]];
    result.all_tied.push_back(alloc);
    // next lexicographic combination
    int pos = need - 1;
    while (pos >= 0 &&
           pick[static_cast<std::size_t>(pos)] == tied.size() - static_cast<std::size_t>(need - pos))
      --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < need; ++i)
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }
  result.canonical = result.all_tied.front();
  return result;
}

// Closest natural distribution for size k: each attribute's entries are
// Hamilton-rounded to multiples of 1/k. A natural target is returned
// unchanged, and the L1 distance is at most 2 * attribute_count / k.
inline TargetDistribution naturalize(const TargetDistribution& target, int k) {
  if (k < 1) throw DomainError("committee size must be at least 1");
  std::vector<std::vector<Rat>> entries;
  entries.reserve(target.entries.size());
  for (const auto& attr : target.entries) {
    ApportionmentResult seats = largest_remainder(attr, k, QuotaKind::Hare);
    std::vector<Rat> row;
    row.reserve(attr.size());
    for (int s : seats.canonical) row.emplace_back(s, k);
    entries.push_back(std::move(row));
  }
  return TargetDistribution(std::move(entries));
}

// Optimal committee for a single-attribute database: apportion the seats
// with the Hare quota, then fill each value's seats with its candidates
// (lowest indices first).
inline Committee hamilton_committee_single_attribute(const CandidateDatabase& db,
                                                     const TargetDistribution& target, int k) {
  target.check_schema(db.schema);
  if (db.schema.attribute_count() != 1)
    throw PreconditionError("database must have exactly one attribute");
  if (k < 1) throw DomainError("committee size must be at least 1");
  ApportionmentResult seats = largest_remainder(target.entries[0], k, QuotaKind::Hare);

  std::vector<int> members;
  std::vector<int> needed = seats.canonical;
  for (std::size_t c = 0; c < db.size() && static_cast<int>(members.size()) < k; ++c) {
    int value = db.candidates[c].values[0];
    if (needed[static_cast<std::size_t>(value)] > 0) {
      --needed[static_cast<std::size_t>(value)];
      members.push_back(static_cast<int>(c));
    }
  }
  for (std::size_t j = 0; j < needed.size(); ++j)
    if (needed[j] > 0)
      throw SupplyError("not enough candidates with value '" +
                        db.schema.attributes[0].values[j] + "': " +
                        std::to_string(needed[j]) + " more needed");
  return Committee(std::move(members));
}

}  // namespace mapr
