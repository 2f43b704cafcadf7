#ifndef REGSEM_BIORDER_HPP_
#define REGSEM_BIORDER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "regsem/semigroup.hpp"
#include "regsem/types.hpp"

namespace regsem {

/// A biordered set: a partial binary algebra on {0..m-1} together with the
/// two quasi-orders it induces. We keep the conventions of the source
/// structure E(S):
///
///   e w^r f  iff  f*e = e        (so w^r(f) = { e : fe = e })
///   e w^l f  iff  e*f = e
///
/// and the product e*f is defined exactly when one of e w^l f, f w^l e,
/// e w^r f, f w^r e holds (the (B1) domain). Definedness is an explicit
/// mask, never a sentinel value.
///
/// Derived relations: R = w^r meet its inverse, L = w^l meet its inverse,
/// and w = w^r meet w^l, the natural partial order.
///
/// The constructor enforces the structural invariants (quasi-orders
/// reflexive and transitive, the (B1) domain exact, products consistent
/// with the quasi-orders, w antisymmetric); the Nambooripad axioms
/// (B2)-(B5) and (R) are checked by verify_axioms and reported as data.
class BiorderedSet {
 public:
  struct Origin {
    std::uint64_t semigroup_hash = 0;
    std::vector<Idx> element_of;  // biorder index -> semigroup element
  };

  BiorderedSet(Idx m, std::vector<bool> omega_r, std::vector<bool> omega_l,
               std::vector<bool> defined, std::vector<Idx> product,
               std::optional<Origin> origin = std::nullopt);

  Idx size() const { return m_; }

  bool omega_r(Idx e, Idx f) const { return omr_[e * m_ + f]; }
  bool omega_l(Idx e, Idx f) const { return oml_[e * m_ + f]; }
  bool omega(Idx e, Idx f) const { return omega_r(e, f) && omega_l(e, f); }
  bool r_related(Idx e, Idx f) const {
    return omega_r(e, f) && omega_r(f, e);
  }
  bool l_related(Idx e, Idx f) const {
    return omega_l(e, f) && omega_l(f, e);
  }

  bool defined(Idx e, Idx f) const { return def_[e * m_ + f]; }
  /// The basic product e*f; DomainConditionError when undefined.
  Idx product(Idx e, Idx f) const;

  /// Elements of the principal order ideal w(e), ascending.
  std::vector<Idx> ideal(Idx e) const;
  /// w^r(e) = { f : f w^r e }, ascending; dual for omega_l_set.
  std::vector<Idx> omega_r_set(Idx e) const;
  std::vector<Idx> omega_l_set(Idx e) const;

  const std::optional<Origin>& origin() const { return origin_; }

 private:
  Idx m_;
  std::vector<bool> omr_, oml_, def_;
  std::vector<Idx> prod_;
  std::optional<Origin> origin_;
};

/// Per-axiom verification outcome; a failure carries the witness tuple of
/// elements at which the axiom broke.
struct AxiomReport {
  struct Entry {
    bool pass = true;
    std::vector<Idx> witness;
    std::string detail;
  };
  Entry b1, b2, b3, b4, b5, r;
  bool biorder() const {
    return b1.pass && b2.pass && b3.pass && b4.pass && b5.pass;
  }
  bool regular_biorder() const { return biorder() && r.pass; }
};

/// The biordered set of the idempotents of S with respect to the basic
/// products. Works for arbitrary S, not only regular ones.
BiorderedSet extract_biorder(const FiniteSemigroup& S);

/// Checks (B1)-(B5) and (R) by exhaustive quantification. Failures are
/// data, not errors.
AxiomReport verify_axioms(const BiorderedSet& E);

/// S(e, f) = { h in E(S) : he = h = fh and ef = ehf }, by table scan.
/// e and f must be idempotents of S; returns semigroup element indices,
/// ascending.
std::vector<Idx> sandwich_semigroup(const FiniteSemigroup& S, Idx e, Idx f);

/// The sandwich set computed purely from basic products: the elements of
/// M(e,f) = w^l(e) meet w^r(f) that dominate all of M(e,f) in the preorder
///   g < h  iff  eg w^r eh and gf w^l hf.
/// Empty exactly when no element dominates (never happens when (R) holds).
std::vector<Idx> sandwich_intrinsic(const BiorderedSet& E, Idx e, Idx f);

/// The translation maps tau^r(e): w^r(e) -> w(e), f -> fe, and
/// tau^l(e): w^l(e) -> w(e), f -> ef, realized via basic products.
struct TauTranslation {
  Idx apex;
  std::vector<Idx> domain;  // ascending
  std::vector<Idx> image;   // aligned with domain
};
TauTranslation tau_r(const BiorderedSet& E, Idx e);
TauTranslation tau_l(const BiorderedSet& E, Idx e);

/// Nambooripad's natural partial order on a regular semigroup:
/// x <= y iff R_x <= R_y and x = fy for some idempotent f in R_x.
/// Returned as a full relation matrix; the partial-order laws and the fact
/// that its restriction to E(S) is w are asserted (TheoremViolationError on
/// failure, which would signal a bug).
std::vector<bool> natural_partial_order(const FiniteSemigroup& S);

/// The six equivalent conditions on a regular semigroup. Each is checked
/// by brute force through an independent route; they must agree (that they
/// do is a theorem), so any disagreement throws TheoremViolationError.
struct Theorem31Classification {
  bool pseudo_inverse = false;       // every intrinsic sandwich a singleton
  bool locally_inverse = false;      // eSe inverse for every idempotent e
  bool omega_semilattice = false;    // every w(e) a semilattice
  bool singleton_sandwich = false;   // every table-scan sandwich a singleton
  bool order_compatible = false;     // <= compatible with multiplication
  bool unique_pair_property = false; // unique (x1,x2) below each (y1,y2)
  bool all() const {
    return pseudo_inverse && locally_inverse && omega_semilattice
           && singleton_sandwich && order_compatible && unique_pair_property;
  }
};
Theorem31Classification classify_theorem31(const FiniteSemigroup& S);

/// Bijection E1 -> E2 preserving w^r, w^l and all basic products (in both
/// directions), if one exists.
std::optional<std::vector<Idx>> are_biorder_isomorphic(const BiorderedSet& E1,
                                                       const BiorderedSet& E2);

}  // namespace regsem

#endif  // REGSEM_BIORDER_HPP_
