#include "regsem/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "regsem/error.hpp"

namespace regsem {

namespace {

// Associativity of the partial table so far: only triples whose four
// required entries are all assigned can fail. kNoIdx marks open cells.
bool consistent(const std::vector<Idx>& t, Idx n) {
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      Idx ab = t[a * n + b];
      if (ab == kNoIdx) continue;
      for (Idx c = 0; c < n; ++c) {
        Idx bc = t[b * n + c];
        if (bc == kNoIdx) continue;
        Idx l = t[ab * n + c], r = t[a * n + bc];
        if (l != kNoIdx && r != kNoIdx && l != r) return false;
      }
    }
  }
  return true;
}

template <typename Visit>
void dfs_tables(std::vector<Idx>& t, Idx n, std::size_t cell, Visit&& visit) {
  if (cell == t.size()) {
    visit(t);
    return;
  }
  for (Idx v = 0; v < n; ++v) {
    t[cell] = v;
    if (consistent(t, n)) dfs_tables(t, n, cell + 1, visit);
  }
  t[cell] = kNoIdx;
}

}  // namespace

std::vector<Idx> canonical_table(const std::vector<Idx>& table, Idx n) {
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), Idx{0});
  std::vector<Idx> best = table, relabeled(table.size());
  do {
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b)
        relabeled[perm[a] * n + perm[b]] = perm[table[a * n + b]];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteSemigroup> enumerate_corpus(int max_order) {
  if (max_order < 1) {
    throw InvalidStructureError("corpus: max_order must be >= 1");
  }
  if (max_order > 4) {
    throw CapExceededError(
        "exhaustive corpus enumeration is capped at order 4");
  }
  std::vector<FiniteSemigroup> out;
  for (Idx n = 1; n <= Idx(max_order); ++n) {
    std::vector<Idx> t(std::size_t(n) * n, kNoIdx);
    dfs_tables(t, n, 0, [&](const std::vector<Idx>& full) {
      if (full == canonical_table(full, n)) {
        out.emplace_back(full, n);
      }
    });
  }
  return out;
}

std::size_t count_associative_tables(int n) {
  if (n < 1 || n > 4) {
    throw CapExceededError("count_associative_tables supports n in [1, 4]");
  }
  std::size_t count = 0;
  std::vector<Idx> t(std::size_t(n) * n, kNoIdx);
  dfs_tables(t, Idx(n), 0, [&](const std::vector<Idx>&) { ++count; });
  return count;
}

}  // namespace regsem
