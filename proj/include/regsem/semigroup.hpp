#ifndef REGSEM_SEMIGROUP_HPP_
#define REGSEM_SEMIGROUP_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "regsem/error.hpp"
#include "regsem/types.hpp"

namespace regsem {

/// Green's relations of a finite semigroup, as partitions of the element
/// set together with the partial orders on R- and L-classes induced by
/// inclusion of principal ideals. All ideals are taken in S^1: the identity
/// is adjoined internally and transparently, never stored.
struct GreenData {
  Idx n_r = 0, n_l = 0, n_h = 0, n_d = 0, n_j = 0;
  std::vector<Idx> r_class, l_class, h_class, d_class, j_class;
  // class_le[i * n + j] == true iff class i <= class j (ideal inclusion)
  std::vector<bool> r_order, l_order;

  bool r_related(Idx a, Idx b) const { return r_class[a] == r_class[b]; }
  bool l_related(Idx a, Idx b) const { return l_class[a] == l_class[b]; }
  bool h_related(Idx a, Idx b) const { return h_class[a] == h_class[b]; }
  bool d_related(Idx a, Idx b) const { return d_class[a] == d_class[b]; }
  bool j_related(Idx a, Idx b) const { return j_class[a] == j_class[b]; }
  /// R_a <= R_b in the partial order on R-classes (aS^1 within bS^1).
  bool r_le(Idx a, Idx b) const {
    return r_order[r_class[a] * n_r + r_class[b]];
  }
  bool l_le(Idx a, Idx b) const {
    return l_order[l_class[a] * n_l + l_class[b]];
  }
};

/// A partition of the element set; when every block is compatible with
/// multiplication on both sides it is a congruence.
struct CongruenceRelation {
  Idx n_blocks = 0;
  std::vector<Idx> block;  // block id per element

  bool is_identity() const { return n_blocks == block.size(); }
  bool is_universal() const { return n_blocks <= 1; }
  bool same(Idx a, Idx b) const { return block[a] == block[b]; }
};

struct RegularityWitness {
  bool regular = false;
  /// For each x: some x' with x x' x == x, or kNoIdx if none exists.
  std::vector<Idx> inverse_of;
  /// First element with no witness, kNoIdx when regular.
  Idx counterexample = kNoIdx;
};

/// A finite semigroup given by its Cayley table. Immutable after
/// construction; all derived data (Green's relations, the maximum
/// idempotent-separating congruence, ...) is computed once under an
/// internal initialization guard and is thereafter read-only, so any
/// number of concurrent readers is safe.
///
/// Convention: table(a, b) is the product a*b (row a, column b). No
/// identity is adjoined implicitly; operations that need S^1 adjoin it
/// internally.
class FiniteSemigroup {
 public:
  /// Validates that every entry is in range and that the table is
  /// associative (exhaustive triple check). Throws NonAssociativeError with
  /// a witness triple, or IndexOutOfRangeError.
  explicit FiniteSemigroup(std::vector<Idx> flat_table, Idx n,
                           std::vector<std::string> labels = {});

  static FiniteSemigroup from_rows(const std::vector<std::vector<Idx>>& rows,
                                   std::vector<std::string> labels = {});

  Idx size() const { return n_; }
  Idx product(Idx a, Idx b) const { return table_[a * n_ + b]; }
  const std::vector<Idx>& table() const { return table_; }

  /// Product of a nonempty word of elements, left to right.
  Idx product_word(const std::vector<Idx>& word) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Idx a) const;

  bool has_identity() const { return identity_ != kNoIdx; }
  std::optional<Idx> identity() const;
  bool has_zero() const { return zero_ != kNoIdx; }
  std::optional<Idx> zero() const;

  const std::vector<Idx>& idempotents() const { return idempotents_; }
  bool is_idempotent(Idx a) const { return product(a, a) == a; }

  const GreenData& green() const;

  /// Regularity with a witness map x -> x' (xx'x = x), or a counterexample.
  const RegularityWitness& regularity() const;
  bool is_regular() const { return regularity().regular; }

  /// All x' with xx'x = x and x'xx' = x'; empty iff x is not regular.
  std::vector<Idx> inverses_of(Idx x) const;

  /// The maximum idempotent-separating congruence mu: the largest
  /// congruence contained in Green's relation H, computed by fixpoint
  /// block-splitting from the H-partition.
  const CongruenceRelation& max_idempotent_separating_congruence() const;

  /// True iff mu is the identity congruence.
  bool is_fundamental() const {
    return max_idempotent_separating_congruence().is_identity();
  }

  /// The opposite semigroup (transposed table).
  FiniteSemigroup opposite() const;

  /// FNV-1a hash of (n, table); stable across runs and platforms.
  std::uint64_t content_hash() const;

 private:
  Idx n_;
  std::vector<Idx> table_;
  std::vector<std::string> labels_;
  std::vector<Idx> idempotents_;
  Idx identity_ = kNoIdx;
  Idx zero_ = kNoIdx;

  struct Derived;
  std::shared_ptr<Derived> derived_;  // lazy caches, shared across copies
};

/// Whether the partition is a two-sided congruence on S.
bool is_congruence(const FiniteSemigroup& S, const CongruenceRelation& rel);

/// Quotient semigroup S/rel; `rel` must be a congruence. Blocks are numbered
/// by least member. If class_of is non-null it receives the element -> class
/// map.
FiniteSemigroup quotient(const FiniteSemigroup& S,
                         const CongruenceRelation& rel,
                         std::vector<Idx>* class_of = nullptr);

/// The subsemigroup on a multiplicatively closed subset (throws
/// InvalidStructureError if not closed). Elements are renumbered in
/// ascending order of their index in S; `embedding` receives new -> old.
FiniteSemigroup subsemigroup(const FiniteSemigroup& S,
                             const std::vector<Idx>& closed_subset,
                             std::vector<Idx>* embedding = nullptr);

/// Searches for a multiplicative bijection S -> T. Backtracking over
/// bijections that respect idempotency and Green's class-size invariants;
/// no canonical-form theory is claimed. Empty result means "not isomorphic".
std::optional<std::vector<Idx>> are_isomorphic(const FiniteSemigroup& S,
                                               const FiniteSemigroup& T);

}  // namespace regsem

#endif  // REGSEM_SEMIGROUP_HPP_
