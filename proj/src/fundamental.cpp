#include "regsem/fundamental.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace regsem {

OmegaIdeal omega_ideal(const BiorderedSet& E, Idx e) {
  return OmegaIdeal{e, E.ideal(e)};
}

OmegaIso::OmegaIso(Idx dom_apex, Idx cod_apex, std::vector<Idx> domain,
                   std::vector<Idx> image)
    : dom_apex_(dom_apex),
      cod_apex_(cod_apex),
      domain_(std::move(domain)),
      image_(std::move(image)) {
  if (domain_.size() != image_.size()) {
    throw InvalidStructureError("omega-iso: domain/image size mismatch");
  }
  if (!std::is_sorted(domain_.begin(), domain_.end())) {
    throw InvalidStructureError("omega-iso: domain must be sorted");
  }
  if (apply(dom_apex_) != cod_apex_) {
    throw InvalidStructureError("omega-iso: apex must map to apex");
  }
}

Idx OmegaIso::apply(Idx g) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), g);
  if (it == domain_.end() || *it != g) {
    throw DomainConditionError("element " + std::to_string(g)
                               + " not in omega-iso domain");
  }
  return image_[it - domain_.begin()];
}

bool OmegaIso::in_domain(Idx g) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), g);
  return it != domain_.end() && *it == g;
}

OmegaIso OmegaIso::inverse() const {
  std::vector<std::pair<Idx, Idx>> pairs;
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    pairs.emplace_back(image_[k], domain_[k]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Idx> dom, img;
  for (auto& [a, b] : pairs) {
    dom.push_back(a);
    img.push_back(b);
  }
  return OmegaIso(cod_apex_, dom_apex_, std::move(dom), std::move(img));
}

OmegaIso compose(const OmegaIso& alpha, const OmegaIso& beta) {
  if (alpha.cod_apex() != beta.dom_apex()) {
    throw DomainConditionError("omega-isos not composable");
  }
  std::vector<Idx> img;
  img.reserve(alpha.domain().size());
  for (Idx v : alpha.image()) img.push_back(beta.apply(v));
  return OmegaIso(alpha.dom_apex(), beta.cod_apex(), alpha.domain(),
                  std::move(img));
}

OmegaIso tau_iso(const BiorderedSet& E, Idx e, Idx f) {
  std::vector<Idx> dom = E.ideal(e), img;
  if (E.r_related(e, f)) {
    for (Idx g : dom) img.push_back(E.product(g, f));
  } else if (E.l_related(e, f)) {
    for (Idx g : dom) img.push_back(E.product(f, g));
  } else {
    throw NotChainRelatedError("tau(e,f) needs e R f or e L f");
  }
  return OmegaIso(e, f, std::move(dom), std::move(img));
}

namespace {

std::vector<Idx> ideal_invariant(const BiorderedSet& E,
                                 const std::vector<Idx>& ideal, Idx x) {
  Idx rd = 0, ru = 0, ld = 0, lu = 0, dc = 0;
  for (Idx y : ideal) {
    rd += E.omega_r(y, x);
    ru += E.omega_r(x, y);
    ld += E.omega_l(y, x);
    lu += E.omega_l(x, y);
    dc += E.defined(x, y);
  }
  return {rd, ru, ld, lu, dc};
}

void iso_search(const BiorderedSet& E, const std::vector<Idx>& I,
                const std::vector<Idx>& J,
                const std::vector<std::vector<Idx>>& inv_i,
                const std::vector<std::vector<Idx>>& inv_j,
                std::vector<Idx>& img, std::vector<bool>& used, std::size_t k,
                std::vector<OmegaIso>& out, Idx e, Idx f) {
  if (k == I.size()) {
    std::vector<Idx> image(I.size());
    for (std::size_t t = 0; t < I.size(); ++t) image[t] = J[img[t]];
    out.emplace_back(e, f, I, std::move(image));
    return;
  }
  for (std::size_t c = 0; c < J.size(); ++c) {
    if (used[c] || inv_i[k] != inv_j[c]) continue;
    if (I[k] == e && J[c] != f) continue;  // apex to apex
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      Idx a = I[k], b = I[t], fa = J[c], fb = J[img[t]];
      ok = E.omega_r(a, b) == E.omega_r(fa, fb)
           && E.omega_r(b, a) == E.omega_r(fb, fa)
           && E.omega_l(a, b) == E.omega_l(fa, fb)
           && E.omega_l(b, a) == E.omega_l(fb, fa)
           && E.defined(a, b) == E.defined(fa, fb);
      if (ok && E.defined(a, b)) {
        // products of ideal members stay in the ideal; both orders
        Idx p = E.product(a, b), q = E.product(b, a);
        Idx p2 = E.product(fa, fb), q2 = E.product(fb, fa);
        auto look = [&](Idx v) {
          auto it = std::lower_bound(I.begin(), I.end(), v);
          return std::size_t(it - I.begin());
        };
        auto lookJ = [&](Idx v) {
          auto it = std::lower_bound(J.begin(), J.end(), v);
          return std::size_t(it - J.begin());
        };
        std::size_t pi = look(p), qi = look(q);
        if (pi <= k && (pi == k ? c : img[pi]) != lookJ(p2)) ok = false;
        if (ok && pi > k && used[lookJ(p2)]) ok = false;
        if (ok) {
          if (qi <= k) {
            ok = (qi == k ? c : img[qi]) == lookJ(q2);
          } else {
            ok = !used[lookJ(q2)];
          }
        }
      }
    }
    if (!ok) continue;
    img[k] = Idx(c);
    used[c] = true;
    iso_search(E, I, J, inv_i, inv_j, img, used, k + 1, out, e, f);
    used[c] = false;
  }
}

}  // namespace

std::vector<OmegaIso> enumerate_omega_isos(const BiorderedSet& E) {
  AxiomReport rep = verify_axioms(E);
  if (!rep.regular_biorder()) {
    throw NotRegularBiorderError(
        "T_E requires a regular biordered set ((B1)-(B5) and (R))");
  }
  const Idx m = E.size();
  std::vector<std::vector<Idx>> ideals(m);
  std::vector<std::vector<std::vector<Idx>>> invs(m);
  for (Idx e = 0; e < m; ++e) {
    ideals[e] = E.ideal(e);
    for (Idx x : ideals[e]) invs[e].push_back(ideal_invariant(E, ideals[e], x));
  }
  std::vector<OmegaIso> out;
  for (Idx e = 0; e < m; ++e) {
    for (Idx f = 0; f < m; ++f) {
      if (ideals[e].size() != ideals[f].size()) continue;
      auto si = invs[e], sj = invs[f];
      std::sort(si.begin(), si.end());
      std::sort(sj.begin(), sj.end());
      if (si != sj) continue;
      std::vector<Idx> img(ideals[e].size(), kNoIdx);
      std::vector<bool> used(ideals[f].size(), false);
      iso_search(E, ideals[e], ideals[f], invs[e], invs[f], img, used, 0, out,
                 e, f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// plain restriction of alpha to w(g), g w e_alpha
OmegaIso restrict_plain(const BiorderedSet& E, Idx g, const OmegaIso& alpha) {
  std::vector<Idx> dom = E.ideal(g), img;
  for (Idx x : dom) img.push_back(alpha.apply(x));
  return OmegaIso(g, alpha.apply(g), std::move(dom), std::move(img));
}

// corestriction: restriction of alpha to the preimage of w(k), k w f_alpha
OmegaIso corestrict_plain(const BiorderedSet& E, const OmegaIso& alpha,
                          Idx k) {
  return restrict_plain(E, alpha.inverse().apply(k), alpha);
}

}  // namespace

OmegaIso restrict_left(const BiorderedSet& E, Idx g, const OmegaIso& alpha) {
  const Idx e = alpha.dom_apex();
  if (E.omega(g, e)) return restrict_plain(E, g, alpha);
  if (E.omega_r(g, e)) {
    Idx ge = E.product(g, e);
    return compose(tau_iso(E, g, ge), restrict_plain(E, ge, alpha));
  }
  if (E.omega_l(g, e)) {
    Idx eg = E.product(e, g);
    return compose(tau_iso(E, g, eg), restrict_plain(E, eg, alpha));
  }
  throw DomainConditionError("g*alpha needs g (w^r or w^l) dom apex");
}

OmegaIso restrict_right(const BiorderedSet& E, const OmegaIso& alpha, Idx h) {
  const Idx f = alpha.cod_apex();
  if (E.omega(h, f)) return corestrict_plain(E, alpha, h);
  if (E.omega_r(h, f)) {
    Idx hf = E.product(h, f);
    return compose(corestrict_plain(E, alpha, hf), tau_iso(E, hf, h));
  }
  if (E.omega_l(h, f)) {
    Idx fh = E.product(f, h);
    return compose(corestrict_plain(E, alpha, fh), tau_iso(E, fh, h));
  }
  throw DomainConditionError("alpha*h needs h (w^r or w^l) cod apex");
}

bool p_related(const BiorderedSet& E, const OmegaIso& alpha,
               const OmegaIso& beta) {
  if (!E.r_related(alpha.dom_apex(), beta.dom_apex())) return false;
  if (!E.l_related(alpha.cod_apex(), beta.cod_apex())) return false;
  OmegaIso lhs = compose(tau_iso(E, alpha.dom_apex(), beta.dom_apex()), beta);
  OmegaIso rhs = compose(alpha, tau_iso(E, alpha.cod_apex(),
                                        beta.cod_apex()));
  return lhs == rhs;
}

Idx TEQuotient::find_class(const OmegaIso& a) const {
  auto it = std::lower_bound(isos.begin(), isos.end(), a);
  if (it == isos.end() || !(*it == a)) {
    throw TheoremViolationError("omega-iso not found in T_E");
  }
  return class_of[it - isos.begin()];
}

TEQuotient build_TE_mod_p(const BiorderedSet& E,
                          std::optional<std::uint64_t> seed) {
  std::vector<OmegaIso> isos = enumerate_omega_isos(E);
  const std::size_t k = isos.size();

  // p must be an equivalence; symmetry and transitivity are checked
  // outright since the sets at hand are small.
  std::vector<bool> rel(k * k, false);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      rel[i * k + j] = p_related(E, isos[i], isos[j]);
  for (std::size_t i = 0; i < k; ++i) {
    if (!rel[i * k + i]) throw TheoremViolationError("p not reflexive");
    for (std::size_t j = 0; j < k; ++j) {
      if (rel[i * k + j] != rel[j * k + i]) {
        throw TheoremViolationError("p not symmetric");
      }
      for (std::size_t l = 0; l < k && rel[i * k + j]; ++l) {
        if (rel[j * k + l] && !rel[i * k + l]) {
          throw TheoremViolationError("p not transitive");
        }
      }
    }
  }

  std::vector<std::vector<Idx>> classes;
  std::vector<Idx> class_of(k, kNoIdx);
  for (std::size_t i = 0; i < k; ++i) {
    if (class_of[i] != kNoIdx) continue;
    Idx c = static_cast<Idx>(classes.size());
    classes.push_back({});
    for (std::size_t j = 0; j < k; ++j) {
      if (rel[i * k + j]) {
        class_of[j] = c;
        classes[c].push_back(Idx(j));
      }
    }
  }
  const Idx nc = static_cast<Idx>(classes.size());

  std::mt19937_64 rng(seed.value_or(0));
  auto pick = [&](std::size_t size) {
    return seed ? std::size_t(rng() % size) : std::size_t(0);
  };

  // the product of two classes via chosen representatives and a chosen
  // sandwich element
  auto product_class = [&](std::size_t ia, std::size_t ib,
                           std::size_t h_choice_mode) -> Idx {
    const OmegaIso& a = isos[ia];
    const OmegaIso& b = isos[ib];
    auto sand = sandwich_intrinsic(E, a.cod_apex(), b.dom_apex());
    if (sand.empty()) {
      throw NotRegularBiorderError("empty sandwich set during quotient build");
    }
    Idx h = sand[h_choice_mode % sand.size()];
    OmegaIso g = compose(restrict_right(E, a, h), restrict_left(E, h, b));
    auto it = std::lower_bound(isos.begin(), isos.end(), g);
    if (it == isos.end() || !(*it == g)) {
      throw TheoremViolationError("(alpha*h)(h*beta) escaped T_E");
    }
    return class_of[it - isos.begin()];
  };

  std::vector<Idx> table(std::size_t(nc) * nc);
  for (Idx ci = 0; ci < nc; ++ci) {
    for (Idx cj = 0; cj < nc; ++cj) {
      std::size_t ra = classes[ci][pick(classes[ci].size())];
      std::size_t rb = classes[cj][pick(classes[cj].size())];
      table[ci * nc + cj] =
          product_class(ra, rb, seed ? std::size_t(rng()) : 0);
    }
  }

  // well-definedness across all representatives and sandwich choices
  for (Idx ci = 0; ci < nc; ++ci) {
    for (Idx cj = 0; cj < nc; ++cj) {
      for (Idx ra : classes[ci]) {
        for (Idx rb : classes[cj]) {
          const OmegaIso& a = isos[ra];
          const OmegaIso& b = isos[rb];
          auto sand = sandwich_intrinsic(E, a.cod_apex(), b.dom_apex());
          for (std::size_t hc = 0; hc < sand.size(); ++hc) {
            Idx got = product_class(ra, rb, hc);
            if (got != table[ci * nc + cj]) {
              throw WellDefinednessError(
                  "quotient product depends on representative or sandwich "
                  "choice at classes (" + std::to_string(ci) + ", "
                  + std::to_string(cj) + ")");
            }
          }
        }
      }
    }
  }

  TEQuotient q{FiniteSemigroup(std::move(table), nc), std::move(isos),
               std::move(classes), std::move(class_of), {}};
  if (!q.semigroup.is_regular()) {
    throw TheoremViolationError("T_E/p is not regular");
  }
  if (!q.semigroup.is_fundamental()) {
    throw TheoremViolationError("T_E/p is not fundamental");
  }
  auto witness = are_biorder_isomorphic(E, extract_biorder(q.semigroup));
  if (!witness.has_value()) {
    throw TheoremViolationError("biorder of T_E/p is not isomorphic to E");
  }
  q.biorder_iso = *witness;
  return q;
}

FundamentalImage fundamental_image(const FiniteSemigroup& S) {
  if (!S.is_regular()) {
    throw NotRegularError("fundamental_image needs a regular semigroup");
  }
  BiorderedSet E = extract_biorder(S);
  const auto& elem_of = E.origin()->element_of;
  std::vector<Idx> pos(S.size(), kNoIdx);
  for (Idx i = 0; i < E.size(); ++i) pos[elem_of[i]] = i;

  FundamentalImage out{build_TE_mod_p(E), {}, {}, FiniteSemigroup({0}, 1),
                       false};
  out.hom.resize(S.size());
  for (Idx x = 0; x < S.size(); ++x) {
    Idx xi = S.inverses_of(x).front();
    Idx a = pos[S.product(x, xi)], b = pos[S.product(xi, x)];
    std::vector<Idx> dom = E.ideal(a), img;
    for (Idx g : dom) {
      Idx ge = elem_of[g];
      Idx image_elem = S.product(S.product(xi, ge), x);
      if (pos[image_elem] == kNoIdx) {
        throw TheoremViolationError("x'gx is not idempotent");
      }
      img.push_back(pos[image_elem]);
    }
    out.hom[x] = out.te.find_class(OmegaIso(a, b, std::move(dom),
                                            std::move(img)));
  }

  for (Idx x = 0; x < S.size(); ++x) {
    for (Idx y = 0; y < S.size(); ++y) {
      if (out.te.semigroup.product(out.hom[x], out.hom[y])
          != out.hom[S.product(x, y)]) {
        throw TheoremViolationError("fundamental representation is not "
                                    "multiplicative");
      }
    }
  }

  out.image_elements = out.hom;
  std::sort(out.image_elements.begin(), out.image_elements.end());
  out.image_elements.erase(
      std::unique(out.image_elements.begin(), out.image_elements.end()),
      out.image_elements.end());
  // fullness: every idempotent class of T_E/p lies in the image
  for (Idx c : out.te.semigroup.idempotents()) {
    if (!std::binary_search(out.image_elements.begin(),
                            out.image_elements.end(), c)) {
      throw TheoremViolationError("image is not full in T_E/p");
    }
  }
  out.image = subsemigroup(out.te.semigroup, out.image_elements);
  out.injective = out.image_elements.size() == S.size();
  if (out.injective != S.is_fundamental()) {
    throw TheoremViolationError(
        "injectivity of the fundamental representation disagrees with mu");
  }
  return out;
}

}  // namespace regsem
