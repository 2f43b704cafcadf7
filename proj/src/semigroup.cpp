#include "regsem/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace regsem {

namespace {

// Word-packed subset of [0, n); used for principal ideals.
struct BitRow {
  std::vector<std::uint64_t> w;
  explicit BitRow(Idx n) : w((n + 63) / 64, 0) {}
  void set(Idx i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(Idx i) const {
    return (w[i >> 6] >> (i & 63)) & 1;
  }
  void or_with(const BitRow& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  bool subset_of(const BitRow& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  bool operator==(const BitRow& o) const { return w == o.w; }
  bool operator<(const BitRow& o) const { return w < o.w; }
};

// Classes of equal BitRows, numbered in order of first appearance, plus the
// inclusion order between distinct class representatives.
struct IdealPartition {
  Idx n_classes = 0;
  std::vector<Idx> cls;
  std::vector<bool> order;  // order[i * n_classes + j]: class i <= class j
};

IdealPartition partition_by_ideal(const std::vector<BitRow>& ideals) {
  IdealPartition out;
  out.cls.resize(ideals.size());
  std::map<BitRow, Idx> seen;
  std::vector<const BitRow*> reps;
  for (Idx a = 0; a < ideals.size(); ++a) {
    auto [it, inserted] = seen.emplace(ideals[a], out.n_classes);
    if (inserted) {
      reps.push_back(&ideals[a]);
      ++out.n_classes;
    }
    out.cls[a] = it->second;
  }
  out.order.assign(std::size_t(out.n_classes) * out.n_classes, false);
  for (Idx i = 0; i < out.n_classes; ++i)
    for (Idx j = 0; j < out.n_classes; ++j)
      out.order[std::size_t(i) * out.n_classes + j] =
          reps[i]->subset_of(*reps[j]);
  return out;
}

struct DisjointSets {
  std::vector<Idx> parent;
  explicit DisjointSets(Idx n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Idx{0});
  }
  Idx find(Idx a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<Idx> renumber(const std::vector<Idx>& raw, Idx* count) {
  std::vector<Idx> out(raw.size());
  std::unordered_map<Idx, Idx> seen;
  Idx next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = seen.emplace(raw[i], next);
    if (inserted) ++next;
    out[i] = it->second;
  }
  *count = next;
  return out;
}

}  // namespace

struct FiniteSemigroup::Derived {
  std::once_flag green_once, reg_once, mu_once;
  GreenData green;
  RegularityWitness reg;
  CongruenceRelation mu;
};

FiniteSemigroup::FiniteSemigroup(std::vector<Idx> flat_table, Idx n,
                                 std::vector<std::string> labels)
    : n_(n),
      table_(std::move(flat_table)),
      labels_(std::move(labels)),
      derived_(std::make_shared<Derived>()) {
  if (n_ == 0 || table_.size() != std::size_t(n_) * n_) {
    throw InvalidStructureError("Cayley table must be a nonempty n x n array");
  }
  for (Idx v : table_) {
    if (v >= n_) {
      throw IndexOutOfRangeError("table entry " + std::to_string(v)
                                 + " out of range [0, " + std::to_string(n_)
                                 + ")");
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw InvalidStructureError("label count does not match order");
  }
  for (Idx a = 0; a < n_; ++a) {
    for (Idx b = 0; b < n_; ++b) {
      Idx ab = product(a, b);
      for (Idx c = 0; c < n_; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          throw NonAssociativeError(a, b, c);
        }
      }
    }
  }
  for (Idx e = 0; e < n_; ++e) {
    if (product(e, e) == e) idempotents_.push_back(e);
  }
  for (Idx e : idempotents_) {
    bool id = true, zero = true;
    for (Idx x = 0; x < n_; ++x) {
      id = id && product(e, x) == x && product(x, e) == x;
      zero = zero && product(e, x) == e && product(x, e) == e;
    }
    if (id) identity_ = e;
    if (zero) zero_ = e;
  }
}

FiniteSemigroup FiniteSemigroup::from_rows(
    const std::vector<std::vector<Idx>>& rows,
    std::vector<std::string> labels) {
  Idx n = static_cast<Idx>(rows.size());
  std::vector<Idx> flat;
  flat.reserve(std::size_t(n) * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw InvalidStructureError("Cayley table must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(std::move(flat), n, std::move(labels));
}

Idx FiniteSemigroup::product_word(const std::vector<Idx>& word) const {
  if (word.empty()) throw InvalidStructureError("empty word has no product");
  Idx acc = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) acc = product(acc, word[i]);
  return acc;
}

std::string FiniteSemigroup::label(Idx a) const {
  if (a < labels_.size() && !labels_[a].empty()) return labels_[a];
  return std::to_string(a);
}

std::optional<Idx> FiniteSemigroup::identity() const {
  if (identity_ == kNoIdx) return std::nullopt;
  return identity_;
}

std::optional<Idx> FiniteSemigroup::zero() const {
  if (zero_ == kNoIdx) return std::nullopt;
  return zero_;
}

const GreenData& FiniteSemigroup::green() const {
  std::call_once(derived_->green_once, [this] {
    GreenData g;
    const Idx n = n_;
    // Principal ideals in S^1: the generator itself plus its translates.
    std::vector<BitRow> right(n, BitRow(n)), left(n, BitRow(n));
    for (Idx a = 0; a < n; ++a) {
      right[a].set(a);
      left[a].set(a);
      for (Idx x = 0; x < n; ++x) {
        right[a].set(product(a, x));
        left[a].set(product(x, a));
      }
    }
    auto rp = partition_by_ideal(right);
    auto lp = partition_by_ideal(left);
    g.n_r = rp.n_classes;
    g.r_class = std::move(rp.cls);
    g.r_order = std::move(rp.order);
    g.n_l = lp.n_classes;
    g.l_class = std::move(lp.cls);
    g.l_order = std::move(lp.order);

    // H = R meet L.
    std::vector<Idx> h_raw(n);
    for (Idx a = 0; a < n; ++a)
      h_raw[a] = g.r_class[a] * g.n_l + g.l_class[a];
    g.h_class = renumber(h_raw, &g.n_h);

    // D = join of R and L (transitive closure via union-find).
    DisjointSets ds(n);
    {
      std::vector<Idx> first_r(g.n_r, kNoIdx), first_l(g.n_l, kNoIdx);
      for (Idx a = 0; a < n; ++a) {
        if (first_r[g.r_class[a]] == kNoIdx) {
          first_r[g.r_class[a]] = a;
        } else {
          ds.unite(first_r[g.r_class[a]], a);
        }
        if (first_l[g.l_class[a]] == kNoIdx) {
          first_l[g.l_class[a]] = a;
        } else {
          ds.unite(first_l[g.l_class[a]], a);
        }
      }
    }
    std::vector<Idx> d_raw(n);
    for (Idx a = 0; a < n; ++a) d_raw[a] = ds.find(a);
    g.d_class = renumber(d_raw, &g.n_d);

    // J via two-sided principal ideals S^1 a S^1.
    std::vector<BitRow> two(n, BitRow(n));
    for (Idx a = 0; a < n; ++a) {
      two[a] = right[a];
      two[a].or_with(left[a]);
      for (Idx x = 0; x < n; ++x) two[a].or_with(right[product(x, a)]);
    }
    auto jp = partition_by_ideal(two);
    g.n_j = jp.n_classes;
    g.j_class = std::move(jp.cls);
    derived_->green = std::move(g);
  });
  return derived_->green;
}

const RegularityWitness& FiniteSemigroup::regularity() const {
  std::call_once(derived_->reg_once, [this] {
    RegularityWitness w;
    w.regular = true;
    w.inverse_of.assign(n_, kNoIdx);
    for (Idx x = 0; x < n_; ++x) {
      for (Idx y = 0; y < n_; ++y) {
        if (product(product(x, y), x) == x) {
          w.inverse_of[x] = y;
          break;
        }
      }
      if (w.inverse_of[x] == kNoIdx && w.regular) {
        w.regular = false;
        w.counterexample = x;
      }
    }
    derived_->reg = std::move(w);
  });
  return derived_->reg;
}

std::vector<Idx> FiniteSemigroup::inverses_of(Idx x) const {
  if (x >= n_) throw IndexOutOfRangeError("element index out of range");
  std::vector<Idx> out;
  for (Idx y = 0; y < n_; ++y) {
    if (product(product(x, y), x) == x && product(product(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

const CongruenceRelation& FiniteSemigroup::max_idempotent_separating_congruence()
    const {
  std::call_once(derived_->mu_once, [this] {
    // Start from the H-partition and split blocks until every block is
    // compatible with left and right translation; the fixpoint is the
    // largest congruence contained in H.
    const Idx n = n_;
    std::vector<Idx> blk = green().h_class;
    Idx n_blk = green().n_h;
    for (;;) {
      std::map<std::vector<Idx>, Idx> sig_to_new;
      std::vector<Idx> next(n);
      std::vector<Idx> sig(2 * std::size_t(n) + 1);
      for (Idx a = 0; a < n; ++a) {
        sig[0] = blk[a];
        for (Idx x = 0; x < n; ++x) {
          sig[1 + x] = blk[product(x, a)];
          sig[1 + n + x] = blk[product(a, x)];
        }
        auto [it, inserted] = sig_to_new.emplace(sig, Idx(sig_to_new.size()));
        next[a] = it->second;
      }
      Idx count = static_cast<Idx>(sig_to_new.size());
      if (count == n_blk) break;
      blk = std::move(next);
      n_blk = count;
    }
    CongruenceRelation mu;
    mu.block = renumber(blk, &mu.n_blocks);
    derived_->mu = std::move(mu);
  });
  return derived_->mu;
}

FiniteSemigroup FiniteSemigroup::opposite() const {
  std::vector<Idx> t(std::size_t(n_) * n_);
  for (Idx a = 0; a < n_; ++a)
    for (Idx b = 0; b < n_; ++b) t[a * n_ + b] = product(b, a);
  return FiniteSemigroup(std::move(t), n_, labels_);
}

std::uint64_t FiniteSemigroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(n_);
  for (Idx v : table_) mix(v);
  return h;
}

bool is_congruence(const FiniteSemigroup& S, const CongruenceRelation& rel) {
  const Idx n = S.size();
  if (rel.block.size() != n) return false;
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = a + 1; b < n; ++b) {
      if (!rel.same(a, b)) continue;
      for (Idx x = 0; x < n; ++x) {
        if (!rel.same(S.product(x, a), S.product(x, b))) return false;
        if (!rel.same(S.product(a, x), S.product(b, x))) return false;
      }
    }
  }
  return true;
}

FiniteSemigroup quotient(const FiniteSemigroup& S,
                         const CongruenceRelation& rel,
                         std::vector<Idx>* class_of) {
  if (!is_congruence(S, rel)) {
    throw InvalidStructureError("partition is not a congruence");
  }
  const Idx n = S.size();
  // Renumber blocks by least member so the quotient is reproducible.
  std::vector<Idx> least(rel.n_blocks, kNoIdx);
  for (Idx a = 0; a < n; ++a) {
    if (least[rel.block[a]] == kNoIdx) least[rel.block[a]] = a;
  }
  std::vector<Idx> order(rel.n_blocks);
  std::iota(order.begin(), order.end(), Idx{0});
  std::sort(order.begin(), order.end(),
            [&](Idx i, Idx j) { return least[i] < least[j]; });
  std::vector<Idx> new_id(rel.n_blocks);
  for (Idx k = 0; k < rel.n_blocks; ++k) new_id[order[k]] = k;

  std::vector<Idx> cls(n);
  for (Idx a = 0; a < n; ++a) cls[a] = new_id[rel.block[a]];
  if (class_of != nullptr) *class_of = cls;

  const Idx m = rel.n_blocks;
  std::vector<Idx> rep(m);
  for (Idx a = 0; a < n; ++a) rep[cls[a]] = a;  // any member works
  std::vector<Idx> table(std::size_t(m) * m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j)
      table[i * m + j] = cls[S.product(rep[i], rep[j])];
  return FiniteSemigroup(std::move(table), m);
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& S,
                             const std::vector<Idx>& closed_subset,
                             std::vector<Idx>* embedding) {
  std::vector<Idx> elems(closed_subset);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Idx> pos(S.size(), kNoIdx);
  for (Idx i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  const Idx m = static_cast<Idx>(elems.size());
  std::vector<Idx> table(std::size_t(m) * m);
  for (Idx i = 0; i < m; ++i) {
    for (Idx j = 0; j < m; ++j) {
      Idx p = S.product(elems[i], elems[j]);
      if (pos[p] == kNoIdx) {
        throw InvalidStructureError("subset is not multiplicatively closed");
      }
      table[i * m + j] = pos[p];
    }
  }
  if (embedding != nullptr) *embedding = elems;
  return FiniteSemigroup(std::move(table), m);
}

namespace {

// Per-element invariant vector used to cut the isomorphism search space.
std::vector<std::vector<Idx>> iso_invariants(const FiniteSemigroup& S) {
  const Idx n = S.size();
  const GreenData& g = S.green();
  std::vector<Idx> r_size(g.n_r, 0), l_size(g.n_l, 0), h_size(g.n_h, 0),
      d_size(g.n_d, 0), j_size(g.n_j, 0), r_idem(g.n_r, 0), l_idem(g.n_l, 0);
  for (Idx a = 0; a < n; ++a) {
    ++r_size[g.r_class[a]];
    ++l_size[g.l_class[a]];
    ++h_size[g.h_class[a]];
    ++d_size[g.d_class[a]];
    ++j_size[g.j_class[a]];
    if (S.is_idempotent(a)) {
      ++r_idem[g.r_class[a]];
      ++l_idem[g.l_class[a]];
    }
  }
  std::vector<std::vector<Idx>> inv(n);
  for (Idx a = 0; a < n; ++a) {
    // index and period of the cyclic subsemigroup generated by a
    std::vector<Idx> seen_at(n, kNoIdx);
    Idx cur = a, t = 0;
    while (seen_at[cur] == kNoIdx) {
      seen_at[cur] = t++;
      cur = S.product(cur, a);
    }
    Idx index = seen_at[cur], period = t - seen_at[cur];
    inv[a] = {Idx(S.is_idempotent(a)), index,
              period,  r_size[g.r_class[a]],
              l_size[g.l_class[a]], h_size[g.h_class[a]],
              d_size[g.d_class[a]], j_size[g.j_class[a]],
              r_idem[g.r_class[a]], l_idem[g.l_class[a]],
              Idx(S.product(a, a) == a ? 1 : 0)};
  }
  return inv;
}

bool iso_extend(const FiniteSemigroup& S, const FiniteSemigroup& T,
                const std::vector<std::vector<Idx>>& inv_s,
                const std::vector<std::vector<Idx>>& inv_t,
                std::vector<Idx>& img, std::vector<bool>& used, Idx a) {
  const Idx n = S.size();
  if (a == n) return true;
  for (Idx b = 0; b < n; ++b) {
    if (used[b] || inv_s[a] != inv_t[b]) continue;
    img[a] = b;
    used[b] = true;
    bool ok = true;
    for (Idx c = 0; c <= a && ok; ++c) {
      // check both orders of multiplication against the partial map
      Idx p1 = S.product(a, c), p2 = S.product(c, a);
      Idx q1 = T.product(b, img[c]), q2 = T.product(img[c], b);
      if (p1 <= a) {
        ok = ok && img[p1] == q1;
      } else {
        // q1 must stay available for p1's eventual image
        ok = ok && !used[q1];
      }
      if (ok && p2 <= a) {
        ok = ok && img[p2] == q2;
      } else if (ok) {
        ok = ok && !used[q2];
      }
    }
    if (ok && iso_extend(S, T, inv_s, inv_t, img, used, a + 1)) return true;
    used[b] = false;
    img[a] = kNoIdx;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> are_isomorphic(const FiniteSemigroup& S,
                                               const FiniteSemigroup& T) {
  if (S.size() != T.size()) return std::nullopt;
  if (S.idempotents().size() != T.idempotents().size()) return std::nullopt;
  auto inv_s = iso_invariants(S), inv_t = iso_invariants(T);
  {
    auto a = inv_s, b = inv_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Idx> img(S.size(), kNoIdx);
  std::vector<bool> used(S.size(), false);
  if (iso_extend(S, T, inv_s, inv_t, img, used, 0)) return img;
  return std::nullopt;
}

}  // namespace regsem
