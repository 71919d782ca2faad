#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopnr/finite_ring.hpp"

namespace loopnr {

// Indexing conventions shared by every constructor and by the file format:
//  * products: (a, b) -> a + |A| * b, the first factor least significant;
//  * k x k matrices: entry (i, j) sits at position p = i*k + j and the element
//    index is sum(entry_p * q^p), so entry (0,0) is least significant;
//  * upper triangular matrices: the same, over the positions with i <= j only;
//  * M(G): a map f has index sum(f(i) * n^i); M0(G) drops the fixed f(0),
//    giving sum over i >= 1 of f(i) * n^(i-1).

FiniteRing cyclic_ring(std::size_t n);
CayleyLoop cyclic_loop(std::size_t n);

/// GF(q) for a prime power q = p^k: polynomials over Z/p of degree < k, indexed
/// by their coefficients in base p (constant term least significant), reduced
/// modulo the least monic irreducible polynomial of degree k.
/// Throws ValidationError(SizeMismatch) when q is not a prime power.
FiniteRing galois_field(std::size_t q, const Limits& limits = {});

/// k x k matrices over `base`. Throws BoundExceeded when |base|^(k^2) > limits.max_matrix.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, const Limits& limits = {});
/// Upper triangular k x k matrices. Same bound as matrix_ring.
FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t k, const Limits& limits = {});

/// All self-maps of G (or the zero-fixing ones) under pointwise addition and
/// composition. Throws BoundExceeded when the carrier exceeds limits.max_n.
LoopNearRing map_near_ring(const CayleyLoop& g, bool zero_fixing, const Limits& limits = {});

/// The lexicographically least reduced Latin square of order 5 that is not
/// associative. Computed once and cached.
const CayleyLoop& smallest_nonassociative_loop();

/// Every reduced Latin square (row 0 and column 0 in natural order) of order n,
/// in lexicographic order of the row-major table. Limited to n <= 6.
std::vector<CayleyLoop> enumerate_loops(std::size_t n);

/// Seeded backtracking over reduced Latin squares with a shuffled value order
/// per cell. Deterministic for fixed (n, seed). Limited to n <= 12.
CayleyLoop random_loop(std::size_t n, std::uint64_t seed);

CayleyLoop product(const CayleyLoop& a, const CayleyLoop& b);
LoopNearRing product(const LoopNearRing& a, const LoopNearRing& b, const Limits& limits = {});
FiniteRing product(const FiniteRing& a, const FiniteRing& b, const Limits& limits = {});

/// a *op b = b * a. The result must still be right distributive; otherwise
/// ValidationError(RightDistributivityFails) carries the witness.
LoopNearRing opposite(const LoopNearRing& nr, const Limits& limits = {});
FiniteRing opposite(const FiniteRing& ring, const Limits& limits = {});

enum class StructureKind { Loop, NearRing, Ring };
std::string_view to_string(StructureKind kind) noexcept;

/// A generated or loaded structure. `loop` is always set; `nr` is set for
/// near-rings and rings; `ring` only for rings.
struct Structure {
  StructureKind kind = StructureKind::Loop;
  std::string name;
  CayleyLoop loop;
  std::optional<LoopNearRing> nr;
  std::optional<FiniteRing> ring;

  static Structure of(CayleyLoop loop, std::string name);
  static Structure of(LoopNearRing nr, std::string name);
  static Structure of(FiniteRing ring, std::string name);
};

/// Builds a structure from a spec string:
///   cyclic:n | field:q | matrix:<ring>,k | upper:<ring>,k | product:<x>+<y>[+...]
///   opposite:<x> | m:<loop> | m0:<loop> | nonassoc5 | random:n,seed | latin:n,i
/// A ring or near-ring spec in loop position stands for its additive loop;
/// parentheses group nested products. Throws ParseError on malformed specs.
Structure generate(std::string_view spec, const Limits& limits = {});

struct CatalogEntry {
  std::string name;
  std::string spec;
  std::string description;
};

/// The bundled named structures, in a fixed order.
const std::vector<CatalogEntry>& catalog();

}  // namespace loopnr
