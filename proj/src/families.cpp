#include "regsem/families.hpp"

#include <cmath>
#include <map>

namespace regsem {

namespace {

void check_cap(std::size_t order, const Caps& caps, const std::string& what) {
  if (order == 0) throw InvalidStructureError(what + ": order must be >= 1");
  if (order > caps.max_order) {
    throw CapExceededError(what + " would have order " + std::to_string(order)
                           + " > cap " + std::to_string(caps.max_order));
  }
}

std::size_t checked_pow(std::size_t base, int exp, std::size_t limit) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > limit / std::max<std::size_t>(base, 1)) return limit + 1;
    v *= base;
  }
  return v;
}

}  // namespace

FiniteSemigroup full_transformation(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("full_transformation: n >= 1");
  std::size_t order = checked_pow(n, n, caps.max_order);
  check_cap(order, caps, "full_transformation");
  // Element k <-> image tuple (k / n^0 % n, k / n^1 % n, ...)? No:
  // lexicographic on the tuple read left to right means the tuple is the
  // base-n representation of k with point 0 as the most significant digit.
  auto image = [n](Idx k, int point) {
    Idx v = k;
    for (int i = n - 1; i > point; --i) v /= n;
    return static_cast<Idx>(v % n);
  };
  auto code = [n](const std::vector<Idx>& tup) {
    Idx k = 0;
    for (int i = 0; i < n; ++i) k = k * n + tup[i];
    return k;
  };
  const Idx m = static_cast<Idx>(order);
  std::vector<Idx> table(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  std::vector<Idx> tup(n);
  for (Idx a = 0; a < m; ++a) {
    std::string lab = "[";
    for (int i = 0; i < n; ++i) {
      lab += std::to_string(image(a, i));
      if (i + 1 < n) lab += " ";
    }
    labels[a] = lab + "]";
    for (Idx b = 0; b < m; ++b) {
      for (int i = 0; i < n; ++i) tup[i] = image(b, image(a, i));
      table[a * m + b] = code(tup);
    }
  }
  return FiniteSemigroup(std::move(table), m, std::move(labels));
}

FiniteSemigroup symmetric_inverse(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("symmetric_inverse: n >= 1");
  // Enumerate all partial injective image tuples over {0..n-1, n=undefined}
  // in lexicographic order.
  std::vector<std::vector<Idx>> maps;
  std::vector<Idx> tup(n, 0);
  auto injective = [&](const std::vector<Idx>& t) {
    std::vector<bool> seen(n, false);
    for (Idx v : t) {
      if (v == Idx(n)) continue;
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };
  for (;;) {
    if (injective(tup)) maps.push_back(tup);
    int i = n - 1;
    while (i >= 0 && tup[i] == Idx(n)) tup[i--] = 0;
    if (i < 0) break;
    ++tup[i];
  }
  check_cap(maps.size(), caps, "symmetric_inverse");
  const Idx m = static_cast<Idx>(maps.size());
  std::map<std::vector<Idx>, Idx> index;
  for (Idx a = 0; a < m; ++a) index[maps[a]] = a;
  std::vector<Idx> table(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (Idx a = 0; a < m; ++a) {
    std::string lab = "[";
    for (int i = 0; i < n; ++i) {
      lab += maps[a][i] == Idx(n) ? "-" : std::to_string(maps[a][i]);
      if (i + 1 < n) lab += " ";
    }
    labels[a] = lab + "]";
    for (Idx b = 0; b < m; ++b) {
      std::vector<Idx> comp(n);
      for (int i = 0; i < n; ++i) {
        Idx mid = maps[a][i];
        comp[i] = mid == Idx(n) ? Idx(n) : maps[b][mid];
      }
      table[a * m + b] = index.at(comp);
    }
  }
  return FiniteSemigroup(std::move(table), m, std::move(labels));
}

FiniteSemigroup brandt(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("brandt: n >= 1");
  std::size_t order = std::size_t(n) * n + 1;
  check_cap(order, caps, "brandt");
  const Idx m = static_cast<Idx>(order);
  const Idx zero = m - 1;
  std::vector<Idx> table(std::size_t(m) * m, zero);
  std::vector<std::string> labels(m);
  labels[zero] = "0";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Idx a = Idx(i * n + j);
      labels[a] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (j == k) table[a * m + Idx(k * n + l)] = Idx(i * n + l);
        }
      }
    }
  }
  return FiniteSemigroup(std::move(table), m, std::move(labels));
}

FiniteSemigroup rectangular_band(int p, int q, const Caps& caps) {
  if (p < 1 || q < 1) throw InvalidStructureError("rectangular_band: p,q >= 1");
  std::size_t order = std::size_t(p) * q;
  check_cap(order, caps, "rectangular_band");
  const Idx m = static_cast<Idx>(order);
  std::vector<Idx> table(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      Idx a = Idx(i * q + j);
      labels[a] = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                  + ")";
      for (int k = 0; k < p; ++k)
        for (int l = 0; l < q; ++l) table[a * m + Idx(k * q + l)] = Idx(i * q + l);
    }
  }
  return FiniteSemigroup(std::move(table), m, std::move(labels));
}

FiniteSemigroup chain_semilattice(int k, const Caps& caps) {
  if (k < 1) throw InvalidStructureError("chain_semilattice: k >= 1");
  check_cap(std::size_t(k), caps, "chain_semilattice");
  const Idx m = static_cast<Idx>(k);
  std::vector<Idx> table(std::size_t(m) * m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b) table[a * m + b] = std::min(a, b);
  return FiniteSemigroup(std::move(table), m);
}

FiniteSemigroup matrix_monoid(int dim, int field_order, const Caps& caps) {
  if (dim < 1) throw InvalidStructureError("matrix_monoid: dim >= 1");
  if (field_order != 2 && field_order != 3) {
    throw InvalidStructureError("matrix_monoid: field_order must be 2 or 3");
  }
  const int q = field_order, cells = dim * dim;
  std::size_t order = checked_pow(q, cells, caps.max_order);
  check_cap(order, caps, "matrix_monoid");
  const Idx m = static_cast<Idx>(order);
  auto entry = [&](Idx code, int r, int c) {
    Idx v = code;
    for (int i = cells - 1; i > r * dim + c; --i) v /= q;
    return int(v % q);
  };
  std::vector<Idx> table(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (Idx a = 0; a < m; ++a) {
    std::string lab = "[";
    for (int i = 0; i < cells; ++i) {
      lab += std::to_string(entry(a, i / dim, i % dim));
      if (i + 1 < cells) lab += (i % dim == dim - 1) ? ";" : "";
    }
    labels[a] = lab + "]";
    for (Idx b = 0; b < m; ++b) {
      Idx code = 0;
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          int v = 0;
          for (int k = 0; k < dim; ++k) v += entry(a, r, k) * entry(b, k, c);
          code = code * q + Idx(v % q);
        }
      }
      table[a * m + b] = code;
    }
  }
  return FiniteSemigroup(std::move(table), m, std::move(labels));
}

FiniteSemigroup left_zero(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("left_zero: n >= 1");
  check_cap(std::size_t(n), caps, "left_zero");
  const Idx m = static_cast<Idx>(n);
  std::vector<Idx> table(std::size_t(m) * m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b) table[a * m + b] = a;
  return FiniteSemigroup(std::move(table), m);
}

FiniteSemigroup right_zero(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("right_zero: n >= 1");
  check_cap(std::size_t(n), caps, "right_zero");
  const Idx m = static_cast<Idx>(n);
  std::vector<Idx> table(std::size_t(m) * m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b) table[a * m + b] = b;
  return FiniteSemigroup(std::move(table), m);
}

FiniteSemigroup null_plus_zero(int n, const Caps& caps) {
  if (n < 1) throw InvalidStructureError("null_plus_zero: n >= 1");
  check_cap(std::size_t(n), caps, "null_plus_zero");
  const Idx m = static_cast<Idx>(n);
  std::vector<Idx> table(std::size_t(m) * m, 0);
  return FiniteSemigroup(std::move(table), m);
}

FiniteSemigroup generate_family(const std::string& kind,
                                const std::vector<int>& params,
                                const Caps& caps) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw InvalidStructureError("family '" + kind + "' expects "
                                  + std::to_string(k) + " parameter(s)");
    }
  };
  if (kind == "full_transformation") {
    need(1);
    return full_transformation(params[0], caps);
  }
  if (kind == "symmetric_inverse") {
    need(1);
    return symmetric_inverse(params[0], caps);
  }
  if (kind == "brandt") {
    need(1);
    return brandt(params[0], caps);
  }
  if (kind == "rectangular_band") {
    need(2);
    return rectangular_band(params[0], params[1], caps);
  }
  if (kind == "chain_semilattice") {
    need(1);
    return chain_semilattice(params[0], caps);
  }
  if (kind == "matrix_monoid") {
    need(2);
    return matrix_monoid(params[0], params[1], caps);
  }
  if (kind == "left_zero") {
    need(1);
    return left_zero(params[0], caps);
  }
  if (kind == "right_zero") {
    need(1);
    return right_zero(params[0], caps);
  }
  if (kind == "null_plus_zero") {
    need(1);
    return null_plus_zero(params[0], caps);
  }
  throw InvalidStructureError("unknown family kind '" + kind + "'");
}

}  // namespace regsem
