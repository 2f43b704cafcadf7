#ifndef REGSEM_IO_HPP_
#define REGSEM_IO_HPP_

#include <iosfwd>
#include <string>

#include "regsem/biorder.hpp"
#include "regsem/config.hpp"
#include "regsem/semigroup.hpp"

namespace regsem {

// Cayley file format ".cay":
//   line 1:        n
//   next n lines:  n space-separated base-10 element indices; row i,
//                  column j is the product i*j
//   afterwards:    optional comment lines starting with '#';
//                  "# labels: a b c" assigns display names positionally.
// Parsing is whitespace-tolerant.
FiniteSemigroup read_cay(std::istream& in, const Caps& caps = default_caps());
FiniteSemigroup read_cay_file(const std::string& path,
                              const Caps& caps = default_caps());
void write_cay(std::ostream& out, const FiniteSemigroup& S);
void write_cay_file(const std::string& path, const FiniteSemigroup& S);

// Biorder file format ".bos":
//   line 1:            |E|
//   |E| lines:         omega^r as 0/1 rows (row e, column f: e w^r f)
//   blank line
//   |E| lines:         omega^l as 0/1 rows
//   blank line
//   |E| lines:         basic products, "-" for undefined entries
BiorderedSet read_bos(std::istream& in);
BiorderedSet read_bos_file(const std::string& path);
void write_bos(std::ostream& out, const BiorderedSet& E);
void write_bos_file(const std::string& path, const BiorderedSet& E);

/// Loads either format by extension (".cay" loads then extracts the
/// biorder; ".bos" loads directly). Biorders loaded from files must pass
/// (B1)-(B5) before use; this enforces that gate.
BiorderedSet read_biorder_any(const std::string& path,
                              const Caps& caps = default_caps());

}  // namespace regsem

#endif  // REGSEM_IO_HPP_
