#include "tracta/gamma.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

GammaKind GammaKind::lex(int k) {
  if (k < 1) throw PreconditionError("lex tuple width must be positive");
  return {Tag::Lex, k};
}

std::string GammaKind::name() const {
  switch (tag) {
    case Tag::Int:
      return "Z";
    case Tag::Rational:
      return "Q";
    case Tag::Lex:
      return "Q^" + std::to_string(width) + "_lex";
  }
  return "?";
}

GammaValue::GammaValue(std::vector<Rational> components) : c_(std::move(components)) {
  if (c_.empty()) throw PreconditionError("group value needs at least one component");
  for (auto& q : c_) q.canonicalize();
}

GammaValue GammaValue::zero(const GammaKind& kind) {
  return GammaValue(std::vector<Rational>(static_cast<std::size_t>(kind.width)));
}

bool GammaValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

void GammaValue::check_kind(const GammaKind& kind) const {
  if (width() != kind.width) {
    throw TractMismatch("group value " + to_string() + " is not in " + kind.name());
  }
  if (kind.tag == GammaKind::Tag::Int && !is_integer(c_[0])) {
    throw TractMismatch("group value " + to_string() + " is not an integer");
  }
}

static void require_same_width(const GammaValue& a, const GammaValue& b) {
  if (a.width() != b.width()) {
    throw TractMismatch("group kind mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

GammaValue operator+(const GammaValue& a, const GammaValue& b) {
  GammaValue r = a;
  r += b;
  return r;
}

GammaValue& GammaValue::operator+=(const GammaValue& b) {
  require_same_width(*this, b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

GammaValue operator-(const GammaValue& a) {
  GammaValue r = a;
  for (auto& q : r.c_) q = -q;
  return r;
}

GammaValue operator-(const GammaValue& a, const GammaValue& b) { return a + (-b); }

GammaValue operator*(long k, const GammaValue& a) {
  GammaValue r = a;
  for (auto& q : r.c_) q *= k;
  return r;
}

bool operator==(const GammaValue& a, const GammaValue& b) {
  require_same_width(a, b);
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const GammaValue& a, const GammaValue& b) {
  require_same_width(a, b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string GammaValue::to_string() const {
  if (c_.size() == 1) return tracta::to_string(c_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += tracta::to_string(c_[i]);
  }
  return s + ")";
}

const GammaValue& GammaExt::value() const {
  if (!v_) throw PreconditionError("infinite group value has no finite part");
  return *v_;
}

GammaExt operator+(const GammaExt& a, const GammaExt& b) {
  if (a.is_infinite() || b.is_infinite()) return GammaExt::infinity();
  return GammaExt(*a.v_ + *b.v_);
}

GammaExt GammaExt::negated() const {
  if (is_infinite()) throw PreconditionError("negation of infinity");
  return GammaExt(-*v_);
}

bool operator==(const GammaExt& a, const GammaExt& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const GammaExt& a, const GammaExt& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.v_ <=> *b.v_;
}

std::string GammaExt::to_string() const { return v_ ? v_->to_string() : "inf"; }

GammaExt gamma_min(const GammaExt& a, const GammaExt& b) { return b < a ? b : a; }

std::vector<std::size_t> argmin_set(std::span<const GammaExt> xs) {
  std::vector<std::size_t> out;
  const GammaExt* best = nullptr;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_infinite()) continue;
    if (best == nullptr || xs[i] < *best) {
      best = &xs[i];
      out.assign(1, i);
    } else if (xs[i] == *best) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace tracta
