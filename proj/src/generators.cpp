#include "loopnr/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>
#include <utility>

namespace loopnr {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t limit, const char* what) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > limit / base) throw BoundExceeded(what, value * base, limit);
    value *= base;
  }
  if (value > limit) throw BoundExceeded(what, value, limit);
  return value;
}

// Row-major cells of a reduced square that are not fixed by row 0 / column 0.
std::vector<std::pair<std::size_t, std::size_t>> free_cells(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 1; c < n; ++c) cells.emplace_back(r, c);
  return cells;
}

struct ReducedSquare {
  explicit ReducedSquare(std::size_t n) : n(n), grid(n, std::vector<Elem>(n)), row_used(n, 0), col_used(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      grid[0][i] = grid[i][0] = static_cast<Elem>(i);
      mark(0, i, static_cast<Elem>(i));
      if (i != 0) mark(i, 0, static_cast<Elem>(i));
    }
  }
  bool allowed(std::size_t r, std::size_t c, Elem v) const {
    return ((row_used[r] | col_used[c]) >> v & 1u) == 0;
  }
  void mark(std::size_t r, std::size_t c, Elem v) {
    row_used[r] |= 1u << v;
    col_used[c] |= 1u << v;
  }
  void unmark(std::size_t r, std::size_t c, Elem v) {
    row_used[r] &= ~(1u << v);
    col_used[c] &= ~(1u << v);
  }

  std::size_t n;
  std::vector<std::vector<Elem>> grid;
  std::vector<std::uint32_t> row_used;
  std::vector<std::uint32_t> col_used;
};

// Visits reduced squares in lexicographic order until `visit` returns false.
void for_each_reduced_square(std::size_t n, const std::function<bool(const std::vector<std::vector<Elem>>&)>& visit) {
  ReducedSquare sq(n);
  const auto cells = free_cells(n);
  std::function<bool(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) return visit(sq.grid);
    const auto [r, c] = cells[idx];
    for (Elem v = 0; v < n; ++v) {
      if (!sq.allowed(r, c, v)) continue;
      sq.grid[r][c] = v;
      sq.mark(r, c, v);
      const bool more = fill(idx + 1);
      sq.unmark(r, c, v);
      if (!more) return false;
    }
    return true;
  };
  fill(0);
}

std::vector<std::vector<Elem>> digits_of_all(std::size_t count, std::size_t radix, std::size_t width) {
  std::vector<std::vector<Elem>> out(count, std::vector<Elem>(width));
  for (std::size_t x = 0; x < count; ++x) {
    std::size_t rest = x;
    for (std::size_t p = 0; p < width; ++p) {
      out[x][p] = static_cast<Elem>(rest % radix);
      rest /= radix;
    }
  }
  return out;
}

Elem encode(const std::vector<Elem>& digits, std::size_t radix) {
  std::size_t value = 0;
  for (std::size_t p = digits.size(); p-- > 0;) value = value * radix + digits[p];
  return static_cast<Elem>(value);
}

FiniteRing matrix_like(const FiniteRing& base, std::size_t k, bool upper_only, const Limits& limits) {
  const std::size_t q = base.size();
  // position index for (i, j), or npos when the entry is always zero
  constexpr std::size_t npos = ~std::size_t{0};
  std::vector<std::size_t> pos(k * k, npos);
  std::size_t width = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!upper_only || i <= j) pos[i * k + j] = width++;

  const std::size_t count = checked_power(q, width, limits.max_matrix, "matrix ring size");
  const auto digits = digits_of_all(count, q, width);
  Table add(count), mul(count);
  std::vector<Elem> scratch(width);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y) {
      for (std::size_t p = 0; p < width; ++p) scratch[p] = base.add(digits[x][p], digits[y][p]);
      add.set(static_cast<Elem>(x), static_cast<Elem>(y), encode(scratch, q));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          if (pos[i * k + j] == npos) continue;
          Elem acc = 0;
          for (std::size_t l = 0; l < k; ++l) {
            const std::size_t left = pos[i * k + l];
            const std::size_t right = pos[l * k + j];
            if (left == npos || right == npos) continue;
            acc = base.add(acc, base.mul(digits[x][left], digits[y][right]));
          }
          scratch[pos[i * k + j]] = acc;
        }
      mul.set(static_cast<Elem>(x), static_cast<Elem>(y), encode(scratch, q));
    }
  std::vector<Elem> identity(width, 0);
  for (std::size_t i = 0; i < k; ++i) identity[pos[i * k + i]] = base.one();
  return make_ring(add, mul, encode(identity, q), limits);
}

// ---------------------------------------------------------------------------
// Spec parsing

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Removes one pair of parentheses when they enclose the whole string.
std::string_view unwrap(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in spec");
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in spec");
  parts.push_back(s.substr(start));
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view context) {
  s = trim(s);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a non-negative integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
  return value;
}

// "<body>,<k>" split at the last top-level comma.
std::pair<std::string_view, std::size_t> split_last_arg(std::string_view body, std::string_view context) {
  const auto parts = split_top_level(body, ',');
  if (parts.size() < 2) throw ParseError("expected '<structure>,<k>' in '" + std::string(context) + "'");
  const auto last = parts.back();
  const std::size_t cut = static_cast<std::size_t>(last.data() - body.data()) - 1;
  return {body.substr(0, cut), parse_count(last, context)};
}

const FiniteRing& need_ring(const Structure& s, std::string_view context) {
  if (!s.ring) throw ParseError("'" + std::string(context) + "' needs a ring, got a " + std::string(to_string(s.kind)));
  return *s.ring;
}

const LoopNearRing& need_nr(const Structure& s, std::string_view context) {
  if (!s.nr) throw ParseError("'" + std::string(context) + "' needs a near-ring, got a loop");
  return *s.nr;
}

Structure product_of(const Structure& a, const Structure& b, const Limits& limits, std::string name) {
  if (a.ring && b.ring) return Structure::of(product(*a.ring, *b.ring, limits), std::move(name));
  if (a.nr && b.nr) return Structure::of(product(*a.nr, *b.nr, limits), std::move(name));
  return Structure::of(product(a.loop, b.loop), std::move(name));
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors

CayleyLoop cyclic_loop(std::size_t n) { return cyclic_ring(n).as_lnr().additive(); }

FiniteRing cyclic_ring(std::size_t n) {
  if (n == 0) throw ValidationError(ErrorKind::NotSquare, {}, "Z/n needs n >= 1");
  Table add(n), mul(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add.set(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>((a + b) % n));
      mul.set(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>((a * b) % n));
    }
  return make_ring(add, mul, static_cast<Elem>(1 % n), Limits{.max_n = n});
}

FiniteRing galois_field(std::size_t q, const Limits& limits) {
  require_within("field size", q, limits.max_n);
  std::size_t p = 2;
  while (p <= q && q % p != 0) ++p;
  std::size_t k = 0;
  for (std::size_t rest = q; rest > 1; rest /= p) {
    if (rest % p != 0 || q < 2) throw ValidationError(ErrorKind::SizeMismatch, {}, "field order must be a prime power");
    ++k;
  }
  if (q < 2) throw ValidationError(ErrorKind::SizeMismatch, {}, "field order must be a prime power");

  const auto digits = digits_of_all(q, p, k);
  Table add(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      std::vector<Elem> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = static_cast<Elem>((digits[a][i] + digits[b][i]) % p);
      add.set(static_cast<Elem>(a), static_cast<Elem>(b), encode(sum, p));
    }

  // Multiplication modulo x^k + c_{k-1} x^{k-1} + ... + c_0, where `low` holds c.
  auto multiply_mod = [&](const std::vector<Elem>& low) {
    Table mul(q);
    std::vector<std::size_t> prod(2 * k);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
        for (std::size_t d = 2 * k; d-- > k;) {
          const std::size_t lead = prod[d];
          prod[d] = 0;
          for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - low[i]) * lead) % p;
        }
        std::vector<Elem> r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<Elem>(prod[i]);
        mul.set(static_cast<Elem>(a), static_cast<Elem>(b), encode(r, p));
      }
    return mul;
  };
  auto is_field = [&](const Table& mul) {
    for (Elem a = 1; a < q; ++a) {
      bool invertible = false;
      for (Elem b = 1; b < q && !invertible; ++b) invertible = mul(a, b) == 1;
      if (!invertible) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < q; ++c) {
    auto mul = multiply_mod(digits[c]);
    if (is_field(mul)) return make_ring(add, mul, 1, limits);
  }
  throw TheoremFalsified("no irreducible polynomial of degree " + std::to_string(k) + " over Z/" + std::to_string(p));
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, const Limits& limits) {
  return matrix_like(base, k, false, limits);
}

FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t k, const Limits& limits) {
  return matrix_like(base, k, true, limits);
}

LoopNearRing map_near_ring(const CayleyLoop& g, bool zero_fixing, const Limits& limits) {
  const std::size_t n = g.size();
  const std::size_t width = zero_fixing ? n - 1 : n;
  const std::size_t count = checked_power(n, width, limits.max_n, "map near-ring size");
  const std::size_t offset = zero_fixing ? 1 : 0;

  // maps[m][x] = f_m(x)
  auto digits = digits_of_all(count, n, width);
  std::vector<std::vector<Elem>> maps(count, std::vector<Elem>(n, 0));
  for (std::size_t m = 0; m < count; ++m)
    for (std::size_t p = 0; p < width; ++p) maps[m][p + offset] = digits[m][p];
  digits.clear();

  auto index_of = [&](const std::vector<Elem>& f) {
    std::size_t value = 0;
    for (std::size_t x = n; x-- > offset;) value = value * n + f[x];
    return static_cast<Elem>(value);
  };

  Table add(count), mul(count);
  std::vector<Elem> scratch(n);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      for (std::size_t x = 0; x < n; ++x) scratch[x] = g.add(maps[a][x], maps[b][x]);
      add.set(static_cast<Elem>(a), static_cast<Elem>(b), index_of(scratch));
      for (std::size_t x = 0; x < n; ++x) scratch[x] = maps[a][maps[b][x]];
      mul.set(static_cast<Elem>(a), static_cast<Elem>(b), index_of(scratch));
    }
  std::vector<Elem> identity(n);
  for (std::size_t x = 0; x < n; ++x) identity[x] = static_cast<Elem>(x);
  return validate_lnr(add, mul, index_of(identity), limits);
}

const CayleyLoop& smallest_nonassociative_loop() {
  static const CayleyLoop cached = [] {
    std::optional<CayleyLoop> found;
    for_each_reduced_square(5, [&](const std::vector<std::vector<Elem>>& rows) {
      auto loop = validate_loop(rows);
      if (is_associative(loop)) return true;
      found = std::move(loop);
      return false;
    });
    if (!found) throw TheoremFalsified("no nonassociative loop of order 5 found");
    return *found;
  }();
  return cached;
}

std::vector<CayleyLoop> enumerate_loops(std::size_t n) {
  require_within("loop enumeration order", n, 6);
  if (n == 0) return {};
  std::vector<CayleyLoop> out;
  for_each_reduced_square(n, [&](const std::vector<std::vector<Elem>>& rows) {
    out.push_back(validate_loop(rows));
    return true;
  });
  return out;
}

CayleyLoop random_loop(std::size_t n, std::uint64_t seed) {
  require_within("random loop order", n, 12);
  if (n == 0) throw ValidationError(ErrorKind::NotSquare, {}, "a loop needs at least one element");
  std::mt19937_64 rng(seed);
  ReducedSquare sq(n);
  const auto cells = free_cells(n);
  // Fisher-Yates with a plain modulus: the distribution objects of the standard
  // library are implementation-defined, and the output must match across platforms.
  auto shuffle = [&](std::vector<Elem>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  };
  std::function<bool(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) return true;
    const auto [r, c] = cells[idx];
    std::vector<Elem> candidates;
    for (Elem v = 0; v < n; ++v)
      if (sq.allowed(r, c, v)) candidates.push_back(v);
    shuffle(candidates);
    for (Elem v : candidates) {
      sq.grid[r][c] = v;
      sq.mark(r, c, v);
      if (fill(idx + 1)) return true;
      sq.unmark(r, c, v);
    }
    return false;
  };
  if (!fill(0)) throw TheoremFalsified("random loop search exhausted");
  return validate_loop(sq.grid);
}

CayleyLoop product(const CayleyLoop& a, const CayleyLoop& b) {
  const std::size_t na = a.size();
  const std::size_t n = na * b.size();
  if (n > kMaxCarrier) throw BoundExceeded("product size", n, kMaxCarrier);
  Table add(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto lo = a.add(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const auto hi = b.add(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      add.set(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(lo + na * hi));
    }
  return validate_loop(add);
}

LoopNearRing product(const LoopNearRing& a, const LoopNearRing& b, const Limits& limits) {
  const std::size_t na = a.size();
  require_within("product size", na * b.size(), limits.max_n);
  const auto loop = product(a.additive(), b.additive());
  const std::size_t n = loop.size();
  Table mul(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto lo = a.mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const auto hi = b.mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      mul.set(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(lo + na * hi));
    }
  return validate_lnr(loop, mul, static_cast<Elem>(a.one() + na * b.one()), limits);
}

FiniteRing product(const FiniteRing& a, const FiniteRing& b, const Limits& limits) {
  return validate_ring(product(a.as_lnr(), b.as_lnr(), limits));
}

LoopNearRing opposite(const LoopNearRing& nr, const Limits& limits) {
  const std::size_t n = nr.size();
  Table mul(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul.set(a, b, nr.mul(b, a));
  return validate_lnr(nr.additive(), mul, nr.one(), limits);
}

FiniteRing opposite(const FiniteRing& ring, const Limits& limits) {
  return validate_ring(opposite(ring.as_lnr(), limits));
}

// ---------------------------------------------------------------------------
// Structures and specs

std::string_view to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Loop: return "loop";
    case StructureKind::NearRing: return "lnr";
    case StructureKind::Ring: return "ring";
  }
  return "unknown";
}

Structure Structure::of(CayleyLoop loop, std::string name) {
  Structure s;
  s.kind = StructureKind::Loop;
  s.name = std::move(name);
  s.loop = std::move(loop);
  return s;
}

Structure Structure::of(LoopNearRing nr, std::string name) {
  // A near-ring that happens to satisfy the ring axioms is promoted.
  if (ring_violations(nr).empty()) return of(validate_ring(nr), std::move(name));
  Structure s;
  s.kind = StructureKind::NearRing;
  s.name = std::move(name);
  s.loop = nr.additive();
  s.nr = std::move(nr);
  return s;
}

Structure Structure::of(FiniteRing ring, std::string name) {
  Structure s;
  s.kind = StructureKind::Ring;
  s.name = std::move(name);
  s.loop = ring.as_lnr().additive();
  s.nr = ring.as_lnr();
  s.ring = std::move(ring);
  return s;
}

Structure generate(std::string_view raw, const Limits& limits) {
  const std::string_view spec = unwrap(raw);
  if (spec.empty()) throw ParseError("empty structure spec");
  const std::string name(spec);

  if (spec == "nonassoc5") return Structure::of(smallest_nonassociative_loop(), name);

  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown structure spec '" + name + "'");
  const std::string_view head = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);

  if (head == "cyclic") {
    const auto n = parse_count(body, spec);
    if (n == 0) throw ParseError("cyclic:n needs n >= 1");
    require_within("ring size", n, limits.max_n);
    return Structure::of(cyclic_ring(n), name);
  }
  if (head == "field") {
    const auto q = parse_count(body, spec);
    require_within("field size", q, limits.max_n);
    try {
      return Structure::of(galois_field(q, limits), name);
    } catch (const ValidationError&) {
      throw ParseError("field:q needs a prime power q, got " + std::to_string(q));
    }
  }
  if (head == "matrix" || head == "upper") {
    const auto [inner, k] = split_last_arg(body, spec);
    const auto base = generate(inner, limits);
    const auto& ring = need_ring(base, spec);
    return Structure::of(head == "matrix" ? matrix_ring(ring, k, limits) : upper_triangular_ring(ring, k, limits),
                         name);
  }
  if (head == "product") {
    const auto parts = split_top_level(body, '+');
    if (parts.size() < 2) throw ParseError("product needs at least two factors in '" + name + "'");
    Structure acc = generate(parts[0], limits);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = product_of(acc, generate(parts[i], limits), limits, name);
    acc.name = name;
    return acc;
  }
  if (head == "opposite") {
    const auto inner = generate(body, limits);
    if (inner.ring) return Structure::of(opposite(*inner.ring, limits), name);
    return Structure::of(opposite(need_nr(inner, spec), limits), name);
  }
  if (head == "m" || head == "m0") {
    const auto inner = generate(body, limits);
    return Structure::of(map_near_ring(inner.loop, head == "m0", limits), name);
  }
  if (head == "random") {
    const auto args = split_top_level(body, ',');
    if (args.size() != 2) throw ParseError("expected random:n,seed in '" + name + "'");
    const auto n = parse_count(args[0], spec);
    if (n == 0) throw ParseError("random:n,seed needs n >= 1");
    return Structure::of(random_loop(n, parse_count(args[1], spec)), name);
  }
  if (head == "latin") {
    const auto args = split_top_level(body, ',');
    if (args.size() != 2) throw ParseError("expected latin:n,i in '" + name + "'");
    const auto n = parse_count(args[0], spec);
    const auto i = parse_count(args[1], spec);
    const auto loops = enumerate_loops(n);
    if (i >= loops.size())
      throw ParseError("latin:" + std::to_string(n) + " has " + std::to_string(loops.size()) + " loops, index " +
                       std::to_string(i) + " is out of range");
    return Structure::of(loops[i], name);
  }
  throw ParseError("unknown structure family '" + std::string(head) + "' in '" + name + "'");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"zero", "cyclic:1", "the zero ring"},
      {"z2", "cyclic:2", "the field with two elements"},
      {"z3", "cyclic:3", "the field with three elements"},
      {"z4", "cyclic:4", "local ring with radical {0,2}"},
      {"z6", "cyclic:6", "Z/2 x Z/3, not local"},
      {"z8", "cyclic:8", "local chain ring"},
      {"z9", "cyclic:9", "local chain ring"},
      {"z12", "cyclic:12", "Z/4 x Z/3"},
      {"f4", "field:4", "the field with four elements"},
      {"z2xz2", "product:cyclic:2+cyclic:2", "Boolean ring with four elements"},
      {"z4xz2", "product:cyclic:4+cyclic:2", "product with non-isomorphic factors"},
      {"m2z2", "matrix:cyclic:2,2", "2x2 matrices over Z/2"},
      {"m2z3", "matrix:cyclic:3,2", "2x2 matrices over Z/3"},
      {"t2z2", "upper:cyclic:2,2", "upper triangular 2x2 over Z/2"},
      {"t2z3", "upper:cyclic:3,2", "upper triangular 2x2 over Z/3"},
      {"op_t2z2", "opposite:upper:cyclic:2,2", "opposite of the upper triangular ring over Z/2"},
      {"m_z2", "m:cyclic:2", "all self-maps of Z/2, not zero-symmetric"},
      {"m0_z3", "m0:cyclic:3", "zero-fixing self-maps of Z/3"},
      {"m0_z4", "m0:cyclic:4", "zero-fixing self-maps of Z/4"},
      {"m0_klein", "m0:latin:4,0", "zero-fixing self-maps of the Klein four-group"},
      {"nonassoc5", "nonassoc5", "least nonassociative loop of order 5"},
      {"m0_nonassoc5", "m0:nonassoc5", "zero-fixing self-maps of the order-5 nonassociative loop"},
      {"random6", "random:6,1", "seeded random loop of order 6"},
  };
  return entries;
}

}  // namespace loopnr
