#include "regsem/io.hpp"

#include <fstream>
#include <sstream>

namespace regsem {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

FiniteSemigroup read_cay(std::istream& in, const Caps& caps) {
  std::string line;
  long n = -1;
  std::vector<Idx> flat;
  std::vector<std::string> labels;
  std::size_t rows_read = 0;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    auto pos = trimmed.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    trimmed = trimmed.substr(pos);
    if (trimmed[0] == '#') {
      std::istringstream ls(trimmed.substr(1));
      std::string word;
      if (ls >> word && word == "labels:") {
        std::string lab;
        while (ls >> lab) labels.push_back(lab);
      }
      continue;
    }
    std::istringstream ls(trimmed);
    if (n < 0) {
      if (!(ls >> n) || n < 1) throw ParseError("bad order line");
      if (std::size_t(n) > caps.max_order) {
        throw CapExceededError("file order " + std::to_string(n)
                               + " exceeds cap");
      }
      flat.reserve(std::size_t(n) * n);
      continue;
    }
    if (rows_read == std::size_t(n)) {
      throw ParseError("unexpected extra row");
    }
    long v;
    std::size_t got = 0;
    while (ls >> v) {
      if (v < 0 || v >= n) throw ParseError("entry out of range");
      flat.push_back(static_cast<Idx>(v));
      ++got;
    }
    if (got != std::size_t(n)) throw ParseError("row has wrong length");
    ++rows_read;
  }
  if (n < 0 || rows_read != std::size_t(n)) {
    throw ParseError("truncated Cayley file");
  }
  if (!labels.empty() && labels.size() != std::size_t(n)) {
    throw ParseError("label count does not match order");
  }
  return FiniteSemigroup(std::move(flat), static_cast<Idx>(n),
                         std::move(labels));
}

FiniteSemigroup read_cay_file(const std::string& path, const Caps& caps) {
  auto in = open_or_throw(path);
  return read_cay(in, caps);
}

void write_cay(std::ostream& out, const FiniteSemigroup& S) {
  const Idx n = S.size();
  out << n << "\n";
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      out << S.product(a, b) << (b + 1 < n ? " " : "");
    }
    out << "\n";
  }
  if (!S.labels().empty()) {
    out << "# labels:";
    for (const auto& l : S.labels()) out << " " << l;
    out << "\n";
  }
}

void write_cay_file(const std::string& path, const FiniteSemigroup& S) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_cay(out, S);
}

namespace {

std::vector<bool> read_relation_block(std::istream& in, Idx m,
                                      const char* what) {
  std::vector<bool> rel(std::size_t(m) * m);
  std::string line;
  Idx row = 0;
  while (row < m && std::getline(in, line)) {
    std::istringstream ls(line);
    int v;
    Idx col = 0;
    while (ls >> v) {
      if (col >= m || (v != 0 && v != 1)) {
        throw ParseError(std::string("bad ") + what + " row");
      }
      rel[row * m + col] = v == 1;
      ++col;
    }
    if (col == 0) continue;  // tolerate blank separators
    if (col != m) throw ParseError(std::string(what) + " row wrong length");
    ++row;
  }
  if (row != m) throw ParseError(std::string("truncated ") + what + " block");
  return rel;
}

}  // namespace

BiorderedSet read_bos(std::istream& in) {
  std::string line;
  long m = -1;
  while (m < 0 && std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> m)) {
      m = -1;
      continue;
    }
  }
  if (m < 1) throw ParseError("bad biorder size line");
  const Idx mm = static_cast<Idx>(m);
  auto omr = read_relation_block(in, mm, "omega^r");
  auto oml = read_relation_block(in, mm, "omega^l");
  std::vector<bool> def(std::size_t(mm) * mm, false);
  std::vector<Idx> prod(std::size_t(mm) * mm, 0);
  Idx row = 0;
  while (row < mm && std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    Idx col = 0;
    while (ls >> tok) {
      if (col >= mm) throw ParseError("product row too long");
      if (tok == "-") {
        def[row * mm + col] = false;
      } else {
        long v = std::stol(tok);
        if (v < 0 || v >= m) throw ParseError("product entry out of range");
        def[row * mm + col] = true;
        prod[row * mm + col] = static_cast<Idx>(v);
      }
      ++col;
    }
    if (col == 0) continue;
    if (col != mm) throw ParseError("product row wrong length");
    ++row;
  }
  if (row != mm) throw ParseError("truncated product block");
  return BiorderedSet(mm, std::move(omr), std::move(oml), std::move(def),
                      std::move(prod));
}

BiorderedSet read_bos_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_bos(in);
}

void write_bos(std::ostream& out, const BiorderedSet& E) {
  const Idx m = E.size();
  out << m << "\n";
  for (Idx e = 0; e < m; ++e) {
    for (Idx f = 0; f < m; ++f)
      out << (E.omega_r(e, f) ? 1 : 0) << (f + 1 < m ? " " : "");
    out << "\n";
  }
  out << "\n";
  for (Idx e = 0; e < m; ++e) {
    for (Idx f = 0; f < m; ++f)
      out << (E.omega_l(e, f) ? 1 : 0) << (f + 1 < m ? " " : "");
    out << "\n";
  }
  out << "\n";
  for (Idx e = 0; e < m; ++e) {
    for (Idx f = 0; f < m; ++f) {
      if (E.defined(e, f)) {
        out << E.product(e, f);
      } else {
        out << "-";
      }
      out << (f + 1 < m ? " " : "");
    }
    out << "\n";
  }
}

void write_bos_file(const std::string& path, const BiorderedSet& E) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_bos(out, E);
}

BiorderedSet read_biorder_any(const std::string& path, const Caps& caps) {
  auto ends_with = [&](const char* suf) {
    std::string s(suf);
    return path.size() >= s.size()
           && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".cay")) {
    return extract_biorder(read_cay_file(path, caps));
  }
  BiorderedSet E = read_bos_file(path);
  AxiomReport rep = verify_axioms(E);
  if (!rep.biorder()) {
    std::string which = !rep.b1.pass   ? "B1"
                        : !rep.b2.pass ? "B2"
                        : !rep.b3.pass ? "B3"
                        : !rep.b4.pass ? "B4"
                                       : "B5";
    throw InvalidStructureError("file is not a biordered set: axiom " + which
                                + " fails");
  }
  return E;
}

}  // namespace regsem
