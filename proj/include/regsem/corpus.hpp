#ifndef REGSEM_CORPUS_HPP_
#define REGSEM_CORPUS_HPP_

#include <vector>

#include "regsem/semigroup.hpp"

namespace regsem {

/// Canonical form of a Cayley table: the lexicographically least relabeling
/// under all permutations of {0..n-1}.
std::vector<Idx> canonical_table(const std::vector<Idx>& table, Idx n);

/// Every semigroup of order <= max_order up to isomorphism, one canonical
/// representative each (the table equal to its own canonical form), in
/// ascending order and then lexicographic table order. Deterministic.
/// max_order must be <= 4 (exhaustive mode); throws CapExceededError above.
std::vector<FiniteSemigroup> enumerate_corpus(int max_order);

/// The number of associative n x n tables (labeled count), by the same
/// depth-first search that backs enumerate_corpus; exposed so consistency
/// checks can compare class orbit sizes against it.
std::size_t count_associative_tables(int n);

}  // namespace regsem

#endif  // REGSEM_CORPUS_HPP_
