#ifndef REGSEM_FUNDAMENTAL_HPP_
#define REGSEM_FUNDAMENTAL_HPP_

#include <optional>
#include <vector>

#include "regsem/biorder.hpp"

namespace regsem {

/// The principal order ideal w(e) of a biordered set, with its apex.
/// Closed under w and under all basic products of its members.
struct OmegaIdeal {
  Idx apex;
  std::vector<Idx> elements;  // ascending
};

OmegaIdeal omega_ideal(const BiorderedSet& E, Idx e);

/// An w-isomorphism: a bijection w(e) -> w(f) preserving w^r, w^l and all
/// basic products of the ideals, with apex mapping to apex. Maps act on
/// the right, and composition "alpha then beta" is written alpha * beta.
class OmegaIso {
 public:
  OmegaIso(Idx dom_apex, Idx cod_apex, std::vector<Idx> domain,
           std::vector<Idx> image);

  Idx dom_apex() const { return dom_apex_; }
  Idx cod_apex() const { return cod_apex_; }
  const std::vector<Idx>& domain() const { return domain_; }
  const std::vector<Idx>& image() const { return image_; }

  Idx apply(Idx g) const;
  bool in_domain(Idx g) const;

  OmegaIso inverse() const;

  friend bool operator==(const OmegaIso& a, const OmegaIso& b) {
    return a.dom_apex_ == b.dom_apex_ && a.cod_apex_ == b.cod_apex_
           && a.image_ == b.image_;
  }
  friend bool operator<(const OmegaIso& a, const OmegaIso& b) {
    if (a.dom_apex_ != b.dom_apex_) return a.dom_apex_ < b.dom_apex_;
    if (a.cod_apex_ != b.cod_apex_) return a.cod_apex_ < b.cod_apex_;
    return a.image_ < b.image_;
  }

 private:
  Idx dom_apex_, cod_apex_;
  std::vector<Idx> domain_, image_;
};

/// alpha then beta; requires cod apex of alpha == dom apex of beta.
OmegaIso compose(const OmegaIso& alpha, const OmegaIso& beta);

/// tau(e, f): w(e) -> w(f) for e R f (g -> gf) or e L f (g -> fg);
/// NotChainRelatedError otherwise. tau(e, e) is the identity.
OmegaIso tau_iso(const BiorderedSet& E, Idx e, Idx f);

/// All w-isomorphisms of E: the morphisms of the groupoid T_E, in
/// canonical order. Requires E to satisfy (B1)-(B5) and (R).
std::vector<OmegaIso> enumerate_omega_isos(const BiorderedSet& E);

/// g * alpha for g (w^r or w^l) below the domain apex: the restriction of
/// alpha when g w e_alpha, and tau(g, ge)(ge * alpha) resp.
/// tau(g, eg)(eg * alpha) in the two quasi-order cases.
OmegaIso restrict_left(const BiorderedSet& E, Idx g, const OmegaIso& alpha);

/// alpha * h, the dual corestriction: (alpha * hf) tau(hf, h) when
/// h w^r f_alpha, and (alpha * fh) tau(fh, h) when h w^l f_alpha.
OmegaIso restrict_right(const BiorderedSet& E, const OmegaIso& alpha, Idx h);

/// The equivalence p on T_E:
///   alpha p beta  iff  e_a R e_b, f_a L f_b and
///                      tau(e_a, e_b) beta == alpha tau(f_a, f_b).
bool p_related(const BiorderedSet& E, const OmegaIso& alpha,
               const OmegaIso& beta);

/// T_E / p with the product [alpha][beta] = [(alpha * h)(h * beta)],
/// h in S(f_alpha, e_beta). Element k of the quotient is class k, classes
/// ordered by least member index in the canonical iso list.
struct TEQuotient {
  FiniteSemigroup semigroup;
  std::vector<OmegaIso> isos;             // canonical order
  std::vector<std::vector<Idx>> classes;  // member indices per class
  std::vector<Idx> class_of;              // iso index -> class
  std::vector<Idx> biorder_iso;           // E -> E(semigroup) witness

  Idx find_class(const OmegaIso& a) const;
};

/// Builds T_E/p. Well-definedness of the product (independence of the
/// sandwich element and of class representatives) is asserted over all
/// choices; p is verified to be an equivalence. The result is checked to
/// be regular, fundamental, and biorder-isomorphic to E. When `seed` is
/// given, sandwich elements and representatives are chosen pseudo-randomly
/// instead of canonically; the resulting table must be identical.
TEQuotient build_TE_mod_p(const BiorderedSet& E,
                          std::optional<std::uint64_t> seed = std::nullopt);

/// The fundamental representation of a regular semigroup: x maps to the
/// p-class of the w-isomorphism w(xx') -> w(x'x), g -> x'gx. The image is
/// a full regular subsemigroup of T_{E(S)}/p isomorphic to S/mu, and the
/// map is injective exactly when S is fundamental.
struct FundamentalImage {
  TEQuotient te;
  std::vector<Idx> hom;       // S element -> class index in te.semigroup
  std::vector<Idx> image_elements;  // sorted class indices in the image
  FiniteSemigroup image;      // the image as a semigroup
  bool injective;
};
FundamentalImage fundamental_image(const FiniteSemigroup& S);

}  // namespace regsem

#endif  // REGSEM_FUNDAMENTAL_HPP_
