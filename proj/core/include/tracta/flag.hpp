#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracta/initial.hpp"
#include "tracta/matroid.hpp"

namespace tracta {

/// First incidence relation violated by M ↞ N (M of rank r ≤ rank s of N), if any.
std::optional<RelationFailure> quotient_failure(const PluckerVector& n, const PluckerVector& m);
bool is_quotient(const PluckerVector& n, const PluckerVector& m);

/// Strong matroids on a common ground set with nondecreasing ranks.
class FlagSequence {
 public:
  explicit FlagSequence(std::vector<PluckerVector> parts);

  const std::vector<PluckerVector>& parts() const { return parts_; }
  const Tract& tract() const { return parts_.front().tract(); }
  int n() const { return parts_.front().n(); }
  std::size_t size() const { return parts_.size(); }

 private:
  std::vector<PluckerVector> parts_;
};

struct FlagReport {
  bool ok = true;
  int lower = -1;  // indices of the first failing pair
  int upper = -1;
  RelationFailure relation{};
};

FlagReport check_flag(const FlagSequence& flag);
bool is_flag(const FlagSequence& flag);

/// Componentwise initial matroids. Throws IntegrityError if a flag loses the flag property.
FlagSequence initial_flag(const FlagSequence& flag, std::span<const GammaExt> u);

struct ChainReport {
  bool ok = true;
  int sample = -1;
  int part = -1;
};

/// Every sample that is a covector of M_i is a covector of M_{i+1}.
ChainReport covector_chain_check(const FlagSequence& flag, std::span<const TractVector> samples);

/// A distinguished positive cone F_{>0} of the units.
class TractOrdering {
 public:
  /// Explicit positive base units; on F[Γ] they are lifted to every γ.
  static TractOrdering from_positives(const Tract& t, std::vector<Element> positives);
  /// S, U0, D and Q by sign, Hahn series by leading coefficient, F[Γ] inherited from F.
  static TractOrdering standard(const Tract& t);

  const Tract& tract() const { return tract_; }
  bool inherited() const { return inherited_; }
  const std::vector<Element>& positives() const { return positives_; }
  bool is_positive(const Element& a) const;

 private:
  TractOrdering(Tract t, bool inherited, std::vector<Element> positives)
      : tract_(std::move(t)), inherited_(inherited), positives_(std::move(positives)) {}
  Tract tract_;
  bool inherited_;
  std::vector<Element> positives_;
};

struct OrderingReport {
  bool ok = true;
  std::string failed;  // "closure", "partition" or "null-sum"
  std::string witness;
};

/// Closure under products, F^× = F_{>0} ⊔ -F_{>0}, and no null sum of ≤ max_len positives,
/// sampled over sample_units.
OrderingReport verify_ordering(const TractOrdering& o, int max_len = 3);

/// Every nonzero entry of P is positive.
bool is_nonnegative(const PluckerVector& p, const TractOrdering& o);
bool is_positroid(const PluckerVector& p, const TractOrdering& o, Strength strength);
bool is_flag_positroid(const FlagSequence& flag, const TractOrdering& o);

}  // namespace tracta
