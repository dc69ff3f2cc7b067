// Exact integer loss evaluation for solver inner loops.
//
// All achievable deviations |c/k - pi| share the common denominator
// S = lcm(k, target denominators). Scaling by S turns every loss into an
// integer, so subset enumeration never touches rational normalisation.
// Public results are divided back by S; callers in the solvers additionally
// recompute reported losses through the rational path as a cross-check.
#pragma once

#include <cstddef>
#include <vector>

#include "mapr/model.hpp"
#include "mapr/rational.hpp"

namespace mapr {

// Flat per-(attribute, value) seat counts for one committee, updated
// incrementally as candidates enter and leave.
class CountTally {
 public:
  explicit CountTally(const CandidateDatabase& db) : db_(&db) {
    offsets_.reserve(db.schema.attribute_count());
    std::size_t total = 0;
    for (std::size_t i = 0; i < db.schema.attribute_count(); ++i) {
      offsets_.push_back(total);
      total += db.schema.domain_size(i);
    }
    counts_.assign(total, 0);
  }

  void add(int candidate) {
    const auto& vals = db_->candidates[candidate].values;
    for (std::size_t i = 0; i < offsets_.size(); ++i) ++counts_[offsets_[i] + vals[i]];
  }

  void remove(int candidate) {
    const auto& vals = db_->candidates[candidate].values;
    for (std::size_t i = 0; i < offsets_.size(); ++i) --counts_[offsets_[i] + vals[i]];
  }

  int count(std::size_t attr, std::size_t value) const {
    return counts_[offsets_[attr] + value];
  }

  const CandidateDatabase& db() const { return *db_; }

 private:
  const CandidateDatabase* db_;
  std::vector<std::size_t> offsets_;
  std::vector<int> counts_;
};

class ScaledLossEvaluator {
 public:
  ScaledLossEvaluator(const CandidateDatabase& db, const TargetDistribution& target, int k)
      : k_(k) {
    target.check_schema(db.schema);
    if (k <= 0) throw DomainError("committee size must be positive");
    scale_ = k;
    for (const auto& attr : target.entries)
      for (const Rat& v : attr) scale_ = big_lcm(scale_, v.denominator());

    const std::size_t p = db.schema.attribute_count();
    attr_begin_.reserve(p + 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < p; ++i) {
      attr_begin_.push_back(total);
      total += db.schema.domain_size(i);
    }
    attr_begin_.push_back(total);

    diff_.resize(total);
    best_count_.resize(total);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < db.schema.domain_size(i); ++j) {
        // scaled target seats: pi * S, so |c/k - pi| * S = |c * S/k - pi * S|
        BigInt pi_scaled =
            target.at(i, j).numerator() * (scale_ / target.at(i, j).denominator());
        BigInt step = scale_ / k;
        auto& column = diff_[attr_begin_[i] + j];
        column.reserve(static_cast<std::size_t>(k) + 1);
        BigInt best = -1;
        for (int c = 0; c <= k; ++c) {
          BigInt d = step * c - pi_scaled;
          if (d < 0) d = -d;
          column.push_back(d);
          if (best < 0 || d < best) {
            best = d;
            best_count_[attr_begin_[i] + j] = c;
          }
        }
      }
    }
  }

  const BigInt& scale() const { return scale_; }
  int k() const { return k_; }
  std::size_t attribute_count() const { return attr_begin_.size() - 1; }
  std::size_t domain_size(std::size_t i) const { return attr_begin_[i + 1] - attr_begin_[i]; }

  // Scaled deviation of holding c seats for value j of attribute i.
  const BigInt& deviation(std::size_t i, std::size_t j, int c) const {
    return diff_[attr_begin_[i] + j][static_cast<std::size_t>(c)];
  }

  // Seat count in [0, k] minimising the deviation (lowest such count).
  int best_count(std::size_t i, std::size_t j) const {
    return best_count_[attr_begin_[i] + j];
  }

  BigInt scaled_loss(const CountTally& tally, LossKind kind) const {
    BigInt total = 0;
    for (std::size_t i = 0; i + 1 < attr_begin_.size(); ++i) {
      BigInt attr_max = 0;
      for (std::size_t j = 0; j < domain_size(i); ++j) {
        const BigInt& d = deviation(i, j, tally.count(i, j));
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
  }

  Rat to_loss(const BigInt& scaled) const { return Rat(scaled, scale_); }

 private:
  int k_;
  BigInt scale_;
  std::vector<std::size_t> attr_begin_;
  std::vector<std::vector<BigInt>> diff_;
  std::vector<int> best_count_;
};

}  // namespace mapr
