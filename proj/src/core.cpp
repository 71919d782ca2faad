// Table, ElementSubset, error types and Limits.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>

#include "loopnr/errors.hpp"
#include "loopnr/limits.hpp"
#include "loopnr/subset.hpp"
#include "loopnr/table.hpp"

namespace loopnr {

// ---------------------------------------------------------------------------
// Table

Table::Table(std::size_t n, Elem fill) : n_(n), data_(n * n, static_cast<std::uint16_t>(fill)) {
  if (n > kMaxCarrier) throw BoundExceeded("carrier size", n, kMaxCarrier);
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw ValidationError(ErrorKind::NotSquare, {}, "empty table");
  Table t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw ValidationError(ErrorKind::NotSquare, {static_cast<Elem>(a)},
                            "row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                                " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) {
        throw ValidationError(ErrorKind::EntryOutOfRange, {static_cast<Elem>(a), static_cast<Elem>(b)},
                              "entry " + std::to_string(rows[a][b]) + " outside 0.." + std::to_string(n - 1));
      }
      t.set(static_cast<Elem>(a), static_cast<Elem>(b), rows[a][b]);
    }
  }
  return t;
}

std::vector<std::vector<Elem>> Table::rows() const {
  std::vector<std::vector<Elem>> out(n_, std::vector<Elem>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out[a][b] = data_[a * n_ + b];
  return out;
}

// ---------------------------------------------------------------------------
// Errors

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoTwoSidedZero: return "NoTwoSidedZero";
    case ErrorKind::MulNotAssociative: return "MulNotAssociative";
    case ErrorKind::NotIdentity: return "NotIdentity";
    case ErrorKind::RightDistributivityFails: return "RightDistributivityFails";
    case ErrorKind::ZeroNotLeftAbsorbing: return "ZeroNotLeftAbsorbing";
    case ErrorKind::AdditionNotAbelianGroup: return "AdditionNotAbelianGroup";
    case ErrorKind::LeftDistributivityFails: return "LeftDistributivityFails";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotASubloop: return "NotASubloop";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotApproximatelyIdempotent: return "NotApproximatelyIdempotent";
    case ErrorKind::TargetNotARing: return "TargetNotARing";
    case ErrorKind::ZeroIdempotent: return "ZeroIdempotent";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
  }
  return "Unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.kind);
  if (!v.witness.empty()) {
    os << " witness=(";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

ValidationError::ValidationError(Violation v) : std::runtime_error(describe(v)), violation_(std::move(v)) {}

ValidationError::ValidationError(ErrorKind kind, std::vector<Elem> witness, std::string detail)
    : ValidationError(Violation{kind, std::move(witness), std::move(detail)}) {}

BoundExceeded::BoundExceeded(std::string what_bound, std::size_t value, std::size_t limit)
    : std::runtime_error("BoundExceeded: " + what_bound + " = " + std::to_string(value) + " exceeds limit " +
                         std::to_string(limit)),
      bound_(std::move(what_bound)),
      value_(value),
      limit_(limit) {}

PreconditionFailed::PreconditionFailed(std::string hypothesis, std::vector<Elem> witness)
    : std::runtime_error("PreconditionFailed: " + hypothesis), hypothesis_(std::move(hypothesis)),
      witness_(std::move(witness)) {}

// ---------------------------------------------------------------------------
// ElementSubset

ElementSubset ElementSubset::of(std::size_t ambient, std::initializer_list<Elem> elems) {
  return of(ambient, std::span<const Elem>(elems.begin(), elems.size()));
}

ElementSubset ElementSubset::of(std::size_t ambient, std::span<const Elem> elems) {
  ElementSubset s(ambient);
  for (Elem x : elems) {
    if (x >= ambient) throw ValidationError(ErrorKind::EntryOutOfRange, {x}, "subset member outside carrier");
    s.insert(x);
  }
  return s;
}

ElementSubset ElementSubset::full(std::size_t ambient) {
  ElementSubset s(ambient);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (ambient % 64 != 0) s.words_.back() = (std::uint64_t{1} << (ambient % 64)) - 1;
  return s;
}

std::size_t ElementSubset::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool ElementSubset::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<Elem> ElementSubset::members() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

ElementSubset ElementSubset::complement() const {
  ElementSubset out = full(ambient_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

ElementSubset& ElementSubset::operator|=(const ElementSubset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSubset& ElementSubset::operator&=(const ElementSubset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t ElementSubset::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ ambient_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const ElementSubset& a, const ElementSubset& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return ma < mb;
}

void sort_canonical(std::vector<ElementSubset>& subsets) {
  std::vector<std::pair<std::vector<Elem>, std::size_t>> keys;
  keys.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) keys.emplace_back(subsets[i].members(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<ElementSubset> sorted;
  sorted.reserve(subsets.size());
  for (const auto& k : keys) sorted.push_back(std::move(subsets[k.second]));
  subsets = std::move(sorted);
}

// ---------------------------------------------------------------------------
// Limits

namespace {

void read_env(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc{} && ptr == end) slot = value;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("LOOPNR_MAX_N", l.max_n);
  read_env("LOOPNR_MAX_SUBLOOP_N", l.max_subloop_n);
  read_env("LOOPNR_MAX_SUBLOOPS", l.max_subloops);
  read_env("LOOPNR_MAX_FAMILY_N", l.max_family_n);
  read_env("LOOPNR_MAX_FAMILIES", l.max_families);
  read_env("LOOPNR_MAX_MATRIX", l.max_matrix);
  std::size_t threads = l.threads;
  read_env("LOOPNR_THREADS", threads);
  l.threads = static_cast<unsigned>(threads == 0 ? 1 : threads);
  return l;
}

void require_within(const char* what, std::size_t value, std::size_t limit) {
  if (value > limit) throw BoundExceeded(what, value, limit);
}

}  // namespace loopnr
