#include "regsem/biorder.hpp"

#include <algorithm>

namespace regsem {

BiorderedSet::BiorderedSet(Idx m, std::vector<bool> omega_r,
                           std::vector<bool> omega_l,
                           std::vector<bool> defined, std::vector<Idx> product,
                           std::optional<Origin> origin)
    : m_(m),
      omr_(std::move(omega_r)),
      oml_(std::move(omega_l)),
      def_(std::move(defined)),
      prod_(std::move(product)),
      origin_(std::move(origin)) {
  const std::size_t mm = std::size_t(m_) * m_;
  if (m_ == 0 || omr_.size() != mm || oml_.size() != mm || def_.size() != mm
      || prod_.size() != mm) {
    throw InvalidStructureError("biorder: relation/product arrays must be m x m");
  }
  for (Idx e = 0; e < m_; ++e) {
    if (!omr_[e * m_ + e] || !oml_[e * m_ + e]) {
      throw InvalidStructureError("biorder: quasi-orders must be reflexive (element "
                                  + std::to_string(e) + ")");
    }
  }
  for (Idx e = 0; e < m_; ++e) {
    for (Idx f = 0; f < m_; ++f) {
      for (Idx g = 0; g < m_; ++g) {
        if (omr_[e * m_ + f] && omr_[f * m_ + g] && !omr_[e * m_ + g]) {
          throw InvalidStructureError("biorder: omega^r not transitive at ("
                                      + std::to_string(e) + ","
                                      + std::to_string(f) + ","
                                      + std::to_string(g) + ")");
        }
        if (oml_[e * m_ + f] && oml_[f * m_ + g] && !oml_[e * m_ + g]) {
          throw InvalidStructureError("biorder: omega^l not transitive at ("
                                      + std::to_string(e) + ","
                                      + std::to_string(f) + ","
                                      + std::to_string(g) + ")");
        }
      }
    }
  }
  for (Idx e = 0; e < m_; ++e) {
    for (Idx f = 0; f < m_; ++f) {
      bool basic = oml_[e * m_ + f] || oml_[f * m_ + e] || omr_[e * m_ + f]
                   || omr_[f * m_ + e];
      if (def_[e * m_ + f] != basic) {
        throw InvalidStructureError(
            "biorder: definedness mask must match the (B1) domain at ("
            + std::to_string(e) + "," + std::to_string(f) + ")");
      }
      if (def_[e * m_ + f] && prod_[e * m_ + f] >= m_) {
        throw IndexOutOfRangeError("biorder: product out of range");
      }
      if (omega(e, f) && omega(f, e) && e != f) {
        throw InvalidStructureError("biorder: omega not antisymmetric at ("
                                    + std::to_string(e) + ","
                                    + std::to_string(f) + ")");
      }
    }
  }
  // Products must realize the quasi-orders: e w^r f <=> fe = e, and dually.
  for (Idx e = 0; e < m_; ++e) {
    for (Idx f = 0; f < m_; ++f) {
      if (omr_[e * m_ + f] && prod_[f * m_ + e] != e) {
        throw InvalidStructureError("biorder: e omega^r f requires fe = e at ("
                                    + std::to_string(e) + ","
                                    + std::to_string(f) + ")");
      }
      if (oml_[e * m_ + f] && prod_[e * m_ + f] != e) {
        throw InvalidStructureError("biorder: e omega^l f requires ef = e at ("
                                    + std::to_string(e) + ","
                                    + std::to_string(f) + ")");
      }
    }
  }
}

Idx BiorderedSet::product(Idx e, Idx f) const {
  if (e >= m_ || f >= m_) throw IndexOutOfRangeError("biorder index");
  if (!def_[e * m_ + f]) {
    throw DomainConditionError("basic product (" + std::to_string(e) + ", "
                               + std::to_string(f) + ") is undefined");
  }
  return prod_[e * m_ + f];
}

std::vector<Idx> BiorderedSet::ideal(Idx e) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < m_; ++f)
    if (omega(f, e)) out.push_back(f);
  return out;
}

std::vector<Idx> BiorderedSet::omega_r_set(Idx e) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < m_; ++f)
    if (omega_r(f, e)) out.push_back(f);
  return out;
}

std::vector<Idx> BiorderedSet::omega_l_set(Idx e) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < m_; ++f)
    if (omega_l(f, e)) out.push_back(f);
  return out;
}

BiorderedSet extract_biorder(const FiniteSemigroup& S) {
  const std::vector<Idx>& E = S.idempotents();
  const Idx m = static_cast<Idx>(E.size());
  std::vector<bool> omr(std::size_t(m) * m), oml(std::size_t(m) * m),
      def(std::size_t(m) * m);
  std::vector<Idx> prod(std::size_t(m) * m, 0);
  std::vector<Idx> pos(S.size(), kNoIdx);
  for (Idx i = 0; i < m; ++i) pos[E[i]] = i;
  for (Idx i = 0; i < m; ++i) {
    for (Idx j = 0; j < m; ++j) {
      omr[i * m + j] = S.product(E[j], E[i]) == E[i];
      oml[i * m + j] = S.product(E[i], E[j]) == E[i];
    }
  }
  for (Idx i = 0; i < m; ++i) {
    for (Idx j = 0; j < m; ++j) {
      bool basic = oml[i * m + j] || oml[j * m + i] || omr[i * m + j]
                   || omr[j * m + i];
      def[i * m + j] = basic;
      if (basic) {
        Idx p = S.product(E[i], E[j]);
        if (pos[p] == kNoIdx) {
          // cannot happen: basic products of idempotents are idempotent
          throw TheoremViolationError("basic product not idempotent at ("
                                      + std::to_string(E[i]) + ", "
                                      + std::to_string(E[j]) + ")");
        }
        prod[i * m + j] = pos[p];
      }
    }
  }
  BiorderedSet::Origin origin{S.content_hash(), E};
  return BiorderedSet(m, std::move(omr), std::move(oml), std::move(def),
                      std::move(prod), std::move(origin));
}

namespace {

std::vector<std::vector<Idx>> all_sandwich_sets(const BiorderedSet& E) {
  const Idx m = E.size();
  std::vector<std::vector<Idx>> sand(std::size_t(m) * m);
  for (Idx e = 0; e < m; ++e)
    for (Idx f = 0; f < m; ++f) sand[e * m + f] = sandwich_intrinsic(E, e, f);
  return sand;
}

}  // namespace

AxiomReport verify_axioms(const BiorderedSet& E) {
  const Idx m = E.size();
  AxiomReport rep;

  // (B1): definedness matches the quasi-order domain. Enforced at
  // construction, re-checked here so the report stands on its own.
  for (Idx e = 0; e < m && rep.b1.pass; ++e) {
    for (Idx f = 0; f < m && rep.b1.pass; ++f) {
      bool basic = E.omega_l(e, f) || E.omega_l(f, e) || E.omega_r(e, f)
                   || E.omega_r(f, e);
      if (E.defined(e, f) != basic) {
        rep.b1 = {false, {e, f}, "definedness differs from (B1) domain"};
      }
    }
  }

  // (B2): f w^l e => f L ef w e; f w^r e => f R fe w e.
  for (Idx e = 0; e < m && rep.b2.pass; ++e) {
    for (Idx f = 0; f < m && rep.b2.pass; ++f) {
      if (E.omega_l(f, e)) {
        Idx ef = E.product(e, f);
        if (!(E.l_related(f, ef) && E.omega(ef, e))) {
          rep.b2 = {false, {e, f}, "f w^l e but not f L ef w e"};
        }
      }
      if (rep.b2.pass && E.omega_r(f, e)) {
        Idx fe = E.product(f, e);
        if (!(E.r_related(f, fe) && E.omega(fe, e))) {
          rep.b2 = {false, {e, f}, "f w^r e but not f R fe w e"};
        }
      }
    }
  }

  // (B3) and its dual.
  for (Idx e = 0; e < m && rep.b3.pass; ++e) {
    for (Idx f = 0; f < m && rep.b3.pass; ++f) {
      for (Idx g = 0; g < m && rep.b3.pass; ++g) {
        if (E.omega_r(g, f) && E.omega_l(f, e) && E.omega_l(g, e)) {
          Idx eg = E.product(e, g), ef = E.product(e, f),
              gf = E.product(g, f);
          if (!E.omega_r(eg, ef) || !E.omega_l(gf, e)) {
            rep.b3 = {false, {e, f, g}, "B3 relational part fails"};
          } else if (E.product(e, gf) != E.product(eg, ef)) {
            rep.b3 = {false, {e, f, g}, "e(gf) != (eg)(ef)"};
          }
        }
        if (rep.b3.pass && E.omega_l(g, f) && E.omega_r(f, e)
            && E.omega_r(g, e)) {
          Idx ge = E.product(g, e), fe = E.product(f, e),
              fg = E.product(f, g);
          if (!E.omega_l(ge, fe) || !E.omega_r(fg, e)) {
            rep.b3 = {false, {e, f, g}, "B3 dual relational part fails"};
          } else if (E.product(fg, e) != E.product(fe, ge)) {
            rep.b3 = {false, {e, f, g}, "(fg)e != (fe)(ge)"};
          }
        }
      }
    }
  }

  // (B4) and its dual.
  for (Idx e = 0; e < m && rep.b4.pass; ++e) {
    for (Idx f = 0; f < m && rep.b4.pass; ++f) {
      for (Idx g = 0; g < m && rep.b4.pass; ++g) {
        if (E.omega_l(g, f) && E.omega_l(f, e)) {
          Idx eg = E.product(e, g);
          if (!E.defined(f, eg)) {
            rep.b4 = {false, {e, f, g}, "f(eg) undefined"};
          } else if (E.product(f, g) != E.product(f, eg)) {
            rep.b4 = {false, {e, f, g}, "fg != f(eg)"};
          }
        }
        if (rep.b4.pass && E.omega_r(g, f) && E.omega_r(f, e)) {
          Idx ge = E.product(g, e);
          if (!E.defined(ge, f)) {
            rep.b4 = {false, {e, f, g}, "(ge)f undefined"};
          } else if (E.product(g, f) != E.product(ge, f)) {
            rep.b4 = {false, {e, f, g}, "gf != (ge)f"};
          }
        }
      }
    }
  }

  // (B5) and its dual, plus (R), via the intrinsic sandwich sets.
  auto sand = all_sandwich_sets(E);
  for (Idx e = 0; e < m && rep.b5.pass; ++e) {
    for (Idx f = 0; f < m && rep.b5.pass; ++f) {
      for (Idx g = 0; g < m && rep.b5.pass; ++g) {
        if (E.omega_l(f, e) && E.omega_l(g, e)) {
          Idx ef = E.product(e, f), eg = E.product(e, g);
          std::vector<Idx> lhs = sand[ef * m + eg], rhs;
          for (Idx h : sand[f * m + g]) rhs.push_back(E.product(e, h));
          std::sort(rhs.begin(), rhs.end());
          rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
          if (lhs != rhs) rep.b5 = {false, {e, f, g}, "S(ef,eg) != eS(f,g)"};
        }
        if (rep.b5.pass && E.omega_r(f, e) && E.omega_r(g, e)) {
          Idx fe = E.product(f, e), ge = E.product(g, e);
          std::vector<Idx> lhs = sand[fe * m + ge], rhs;
          for (Idx h : sand[f * m + g]) rhs.push_back(E.product(h, e));
          std::sort(rhs.begin(), rhs.end());
          rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
          if (lhs != rhs) rep.b5 = {false, {e, f, g}, "S(fe,ge) != S(f,g)e"};
        }
      }
    }
  }
  for (Idx e = 0; e < m && rep.r.pass; ++e) {
    for (Idx f = 0; f < m && rep.r.pass; ++f) {
      if (sand[e * m + f].empty()) {
        rep.r = {false, {e, f}, "S(e,f) empty"};
      }
    }
  }
  return rep;
}

std::vector<Idx> sandwich_semigroup(const FiniteSemigroup& S, Idx e, Idx f) {
  if (e >= S.size() || f >= S.size()) {
    throw IndexOutOfRangeError("sandwich_semigroup: element out of range");
  }
  if (!S.is_idempotent(e) || !S.is_idempotent(f)) {
    throw NotIdempotentError("sandwich_semigroup requires idempotent inputs");
  }
  std::vector<Idx> out;
  const Idx ef = S.product(e, f);
  for (Idx h : S.idempotents()) {
    if (S.product(h, e) == h && S.product(f, h) == h
        && S.product(S.product(e, h), f) == ef) {
      out.push_back(h);
    }
  }
  return out;
}

std::vector<Idx> sandwich_intrinsic(const BiorderedSet& E, Idx e, Idx f) {
  const Idx m = E.size();
  if (e >= m || f >= m) throw IndexOutOfRangeError("sandwich_intrinsic");
  std::vector<Idx> M;
  for (Idx h = 0; h < m; ++h) {
    if (E.omega_l(h, e) && E.omega_r(h, f)) M.push_back(h);
  }
  std::vector<Idx> out;
  for (Idx h : M) {
    Idx eh = E.product(e, h), hf = E.product(h, f);
    bool top = true;
    for (Idx g : M) {
      Idx eg = E.product(e, g), gf = E.product(g, f);
      if (!E.omega_r(eg, eh) || !E.omega_l(gf, hf)) {
        top = false;
        break;
      }
    }
    if (top) out.push_back(h);
  }
  return out;
}

TauTranslation tau_r(const BiorderedSet& E, Idx e) {
  TauTranslation t;
  t.apex = e;
  t.domain = E.omega_r_set(e);
  for (Idx f : t.domain) t.image.push_back(E.product(f, e));
  return t;
}

TauTranslation tau_l(const BiorderedSet& E, Idx e) {
  TauTranslation t;
  t.apex = e;
  t.domain = E.omega_l_set(e);
  for (Idx f : t.domain) t.image.push_back(E.product(e, f));
  return t;
}

std::vector<bool> natural_partial_order(const FiniteSemigroup& S) {
  if (!S.is_regular()) {
    throw NotRegularError("natural partial order needs a regular semigroup");
  }
  const Idx n = S.size();
  const GreenData& g = S.green();
  std::vector<bool> le(std::size_t(n) * n, false);
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      if (!g.r_le(x, y)) continue;
      for (Idx f : S.idempotents()) {
        if (g.r_related(f, x) && S.product(f, y) == x) {
          le[x * n + y] = true;
          break;
        }
      }
    }
  }
  for (Idx x = 0; x < n; ++x) {
    if (!le[x * n + x]) {
      throw TheoremViolationError("natural order not reflexive at "
                                  + std::to_string(x));
    }
    for (Idx y = 0; y < n; ++y) {
      if (x != y && le[x * n + y] && le[y * n + x]) {
        throw TheoremViolationError("natural order not antisymmetric");
      }
      for (Idx z = 0; z < n; ++z) {
        if (le[x * n + y] && le[y * n + z] && !le[x * n + z]) {
          throw TheoremViolationError("natural order not transitive");
        }
      }
    }
  }
  for (Idx e : S.idempotents()) {
    for (Idx f : S.idempotents()) {
      bool om = S.product(f, e) == e && S.product(e, f) == e;
      if (le[e * n + f] != om) {
        throw TheoremViolationError(
            "natural order restricted to E(S) differs from omega");
      }
    }
  }
  return le;
}

Theorem31Classification classify_theorem31(const FiniteSemigroup& S) {
  if (!S.is_regular()) {
    throw NotRegularError("classify_theorem31 needs a regular semigroup");
  }
  const Idx n = S.size();
  const std::vector<Idx>& E = S.idempotents();
  const GreenData& g = S.green();
  Theorem31Classification c;

  BiorderedSet Eb = extract_biorder(S);
  c.pseudo_inverse = true;
  for (Idx i = 0; i < Eb.size() && c.pseudo_inverse; ++i)
    for (Idx j = 0; j < Eb.size() && c.pseudo_inverse; ++j)
      c.pseudo_inverse = sandwich_intrinsic(Eb, i, j).size() == 1;

  c.locally_inverse = true;
  for (Idx e : E) {
    std::vector<Idx> local;
    for (Idx x = 0; x < n; ++x)
      local.push_back(S.product(S.product(e, x), e));
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    FiniteSemigroup T = subsemigroup(S, local);
    bool inverse = T.is_regular();
    for (Idx u : T.idempotents()) {
      for (Idx v : T.idempotents()) {
        inverse = inverse && T.product(u, v) == T.product(v, u);
      }
    }
    if (!inverse) {
      c.locally_inverse = false;
      break;
    }
  }

  c.omega_semilattice = true;
  for (Idx e : E) {
    std::vector<Idx> down;
    for (Idx f : E) {
      if (S.product(e, f) == f && S.product(f, e) == f) down.push_back(f);
    }
    for (Idx f : down) {
      for (Idx h : down) {
        Idx fh = S.product(f, h);
        if (fh != S.product(h, f) || !S.is_idempotent(fh)) {
          c.omega_semilattice = false;
        }
      }
    }
    if (!c.omega_semilattice) break;
  }

  c.singleton_sandwich = true;
  for (Idx e : E)
    for (Idx f : E)
      c.singleton_sandwich =
          c.singleton_sandwich && sandwich_semigroup(S, e, f).size() == 1;

  std::vector<bool> le = natural_partial_order(S);
  c.order_compatible = true;
  for (Idx x = 0; x < n && c.order_compatible; ++x) {
    for (Idx y = 0; y < n && c.order_compatible; ++y) {
      if (!le[x * n + y]) continue;
      for (Idx z = 0; z < n; ++z) {
        if (!le[S.product(x, z) * n + S.product(y, z)]
            || !le[S.product(z, x) * n + S.product(z, y)]) {
          c.order_compatible = false;
          break;
        }
      }
    }
  }

  c.unique_pair_property = true;
  for (Idx x = 0; x < n && c.unique_pair_property; ++x) {
    for (Idx y = 0; y < n && c.unique_pair_property; ++y) {
      if (!le[x * n + y]) continue;
      for (Idx y1 = 0; y1 < n && c.unique_pair_property; ++y1) {
        if (!g.l_related(y1, y)) continue;
        for (Idx y2 = 0; y2 < n; ++y2) {
          if (!g.r_related(y2, y)) continue;
          std::size_t c1 = 0, c2 = 0;
          for (Idx x1 = 0; x1 < n; ++x1)
            if (g.l_related(x1, x) && le[x1 * n + y1]) ++c1;
          for (Idx x2 = 0; x2 < n; ++x2)
            if (g.r_related(x2, x) && le[x2 * n + y2]) ++c2;
          if (c1 * c2 != 1) {
            c.unique_pair_property = false;
            break;
          }
        }
      }
    }
  }

  const bool vals[6] = {c.pseudo_inverse,     c.locally_inverse,
                        c.omega_semilattice,  c.singleton_sandwich,
                        c.order_compatible,   c.unique_pair_property};
  for (int i = 1; i < 6; ++i) {
    if (vals[i] != vals[0]) {
      throw TheoremViolationError(
          "equivalent classification conditions disagree (index "
          + std::to_string(i) + " vs 0): this is a bug, not mathematics");
    }
  }
  return c;
}

namespace {

std::vector<std::vector<Idx>> biorder_invariants(const BiorderedSet& E) {
  const Idx m = E.size();
  std::vector<std::vector<Idx>> inv(m);
  for (Idx e = 0; e < m; ++e) {
    Idx rd = 0, ru = 0, ld = 0, lu = 0, dc = 0;
    for (Idx f = 0; f < m; ++f) {
      rd += E.omega_r(f, e);
      ru += E.omega_r(e, f);
      ld += E.omega_l(f, e);
      lu += E.omega_l(e, f);
      dc += E.defined(e, f);
    }
    inv[e] = {rd, ru, ld, lu, dc, Idx(E.ideal(e).size())};
  }
  return inv;
}

bool biorder_iso_extend(const BiorderedSet& A, const BiorderedSet& B,
                        const std::vector<std::vector<Idx>>& ia,
                        const std::vector<std::vector<Idx>>& ib,
                        std::vector<Idx>& img, std::vector<bool>& used,
                        Idx e) {
  const Idx m = A.size();
  if (e == m) return true;
  for (Idx b = 0; b < m; ++b) {
    if (used[b] || ia[e] != ib[b]) continue;
    img[e] = b;
    used[b] = true;
    bool ok = true;
    for (Idx c = 0; c <= e && ok; ++c) {
      ok = A.omega_r(e, c) == B.omega_r(b, img[c])
           && A.omega_r(c, e) == B.omega_r(img[c], b)
           && A.omega_l(e, c) == B.omega_l(b, img[c])
           && A.omega_l(c, e) == B.omega_l(img[c], b)
           && A.defined(e, c) == B.defined(b, img[c]);
      if (ok && A.defined(e, c)) {
        Idx p = A.product(e, c), q = A.product(c, e);
        Idx p2 = B.product(b, img[c]), q2 = B.product(img[c], b);
        if (p <= e) {
          ok = img[p] == p2;
        } else {
          ok = !used[p2];
        }
        if (ok) {
          if (q <= e) {
            ok = img[q] == q2;
          } else {
            ok = !used[q2];
          }
        }
      }
    }
    if (ok && biorder_iso_extend(A, B, ia, ib, img, used, e + 1)) return true;
    used[b] = false;
    img[e] = kNoIdx;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> are_biorder_isomorphic(const BiorderedSet& E1,
                                                       const BiorderedSet& E2) {
  if (E1.size() != E2.size()) return std::nullopt;
  auto ia = biorder_invariants(E1), ib = biorder_invariants(E2);
  {
    auto a = ia, b = ib;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Idx> img(E1.size(), kNoIdx);
  std::vector<bool> used(E1.size(), false);
  if (biorder_iso_extend(E1, E2, ia, ib, img, used, 0)) return img;
  return std::nullopt;
}

}  // namespace regsem
