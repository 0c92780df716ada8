#include "tracta/flag.hpp"

#include <functional>

#include "tracta/errors.hpp"

namespace tracta {

std::optional<RelationFailure> quotient_failure(const PluckerVector& n, const PluckerVector& m) {
  if (!(n.tract() == m.tract()) || n.n() != m.n()) throw TractMismatch("quotient of unrelated matroids");
  if (m.rank() > n.rank()) throw PreconditionError("rank order violated: quotient has larger rank");
  if (m.rank() == 0) return std::nullopt;
  for (Subset I : subsets_of_size(m.n(), m.rank() - 1)) {
    for (Subset J : subsets_of_size(n.n(), n.rank() + 1)) {
      if (!relation_holds(m, n, I, J)) return RelationFailure{I, J};
    }
  }
  return std::nullopt;
}

bool is_quotient(const PluckerVector& n, const PluckerVector& m) { return !quotient_failure(n, m); }

FlagSequence::FlagSequence(std::vector<PluckerVector> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("a flag needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& p = parts_[i];
    if (!(p.tract() == parts_[0].tract()) || p.n() != parts_[0].n()) {
      throw TractMismatch("flag parts live on different tracts or ground sets");
    }
    if (i > 0 && p.rank() < parts_[i - 1].rank()) throw PreconditionError("flag ranks must be nondecreasing");
    if (!is_strong_matroid(p)) {
      throw PreconditionError("flag part " + std::to_string(i + 1) + " is not a strong matroid");
    }
  }
}

FlagReport check_flag(const FlagSequence& flag) {
  FlagReport rep;
  const auto& ps = flag.parts();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (auto f = quotient_failure(ps[j], ps[i])) {
        rep.ok = false;
        rep.lower = static_cast<int>(i);
        rep.upper = static_cast<int>(j);
        rep.relation = *f;
        return rep;
      }
    }
  }
  return rep;
}

bool is_flag(const FlagSequence& flag) { return check_flag(flag).ok; }

FlagSequence initial_flag(const FlagSequence& flag, std::span<const GammaExt> u) {
  std::vector<PluckerVector> parts;
  for (const auto& p : flag.parts()) parts.push_back(initial(p, u).plucker);
  FlagSequence out(std::move(parts));
  if (is_flag(flag) && !is_flag(out)) {
    throw IntegrityError("initial flag at u=" + to_string(u) + " is not a flag");
  }
  return out;
}

ChainReport covector_chain_check(const FlagSequence& flag, std::span<const TractVector> samples) {
  ChainReport rep;
  std::vector<CircuitSet> cs;
  for (const auto& p : flag.parts()) cs.push_back(circuits(p));
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      if (is_covector(cs[i], samples[s]) && !is_covector(cs[i + 1], samples[s])) {
        rep.ok = false;
        rep.sample = static_cast<int>(s);
        rep.part = static_cast<int>(i);
        return rep;
      }
    }
  }
  return rep;
}

TractOrdering TractOrdering::from_positives(const Tract& t, std::vector<Element> positives) {
  Tract base = t.is_extension() ? t.base() : t;
  for (const auto& p : positives) {
    if (p.is_zero()) throw PreconditionError("zero cannot be positive");
    validate(base, p);
  }
  return TractOrdering(t, false, std::move(positives));
}

TractOrdering TractOrdering::standard(const Tract& t) {
  switch (t.base_kind()) {
    case TractKind::Sign:
    case TractKind::RegularPF:
    case TractKind::DyadicPF:
    case TractKind::RationalField:
    case TractKind::HahnField:
      return TractOrdering(t, true, {});
    default:
      throw PreconditionError(t.name() + " has no standard ordering");
  }
}

bool TractOrdering::is_positive(const Element& a) const {
  if (a.is_zero()) return false;
  const BaseUnit& b = a.base();
  if (!inherited_) {
    Element base(b);
    for (const auto& p : positives_) {
      if (p == base) return true;
    }
    return false;
  }
  switch (tract_.base_kind()) {
    case TractKind::Sign:
    case TractKind::RegularPF:
      return std::get<SignUnit>(b).s > 0;
    case TractKind::DyadicPF:
      return std::get<DyadicUnit>(b).sign > 0;
    case TractKind::RationalField:
      return std::get<Rational>(b) > 0;
    case TractKind::HahnField:
      return std::get<HahnSeries>(b).leading_coeff() > 0;
    default:
      return false;
  }
}

OrderingReport verify_ordering(const TractOrdering& o, int max_len) {
  const Tract& t = o.tract();
  OrderingReport rep;
  auto fail = [&](const char* what, std::string witness) {
    rep.ok = false;
    rep.failed = what;
    rep.witness = std::move(witness);
    return rep;
  };
  std::vector<Element> units = sample_units(t);
  std::vector<Element> pos;
  for (const auto& u : units) {
    bool p = o.is_positive(u);
    bool q = o.is_positive(neg(t, u));
    if (p == q) return fail("partition", to_string(t, u));
    if (p) pos.push_back(u);
  }
  for (const auto& a : pos) {
    for (const auto& b : pos) {
      if (!o.is_positive(mul(t, a, b))) return fail("closure", to_string(t, a) + "*" + to_string(t, b));
    }
  }
  std::vector<Element> sum;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (!sum.empty() && is_null(t, sum)) return false;
    if (static_cast<int>(sum.size()) == max_len) return true;
    for (std::size_t i = start; i < pos.size(); ++i) {
      sum.push_back(pos[i]);
      if (!rec(i)) return false;
      sum.pop_back();
    }
    return true;
  };
  if (!rec(0)) return fail("null-sum", to_string(t, sum));
  return rep;
}

bool is_nonnegative(const PluckerVector& p, const TractOrdering& o) {
  if (!(o.tract() == p.tract())) throw TractMismatch("ordering and matroid tracts differ");
  auto supp = p.support();
  if (supp.empty()) return false;
  for (Subset s : supp) {
    if (!o.is_positive(p[s])) return false;
  }
  return true;
}

bool is_positroid(const PluckerVector& p, const TractOrdering& o, Strength strength) {
  return check_plucker(p, strength).ok && is_nonnegative(p, o);
}

bool is_flag_positroid(const FlagSequence& flag, const TractOrdering& o) {
  if (!is_flag(flag)) return false;
  for (const auto& p : flag.parts()) {
    if (!is_nonnegative(p, o)) return false;
  }
  return true;
}

}  // namespace tracta
