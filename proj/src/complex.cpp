#include "srg/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace srg {

SparseMatrix boundary_matrix(const std::vector<GraphCode>& source, const std::vector<GraphCode>& target,
                             ComplexKind complex, Execution ex) {
  std::map<GraphCode, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], static_cast<int>(i));
  auto columns = map_items(
      source, [&](const GraphCode& code) { return project(boundary(decode(code)), complex); }, ex);
  SparseMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [code, q] : columns[j]) {
      auto it = index.find(code);
      if (it == index.end()) throw std::logic_error("boundary_matrix: image of generator " + code_hash(source[j]) +
                                                    " leaves the target basis");
      m.add(it->second, static_cast<int>(j), q);
    }
  return m;
}

ComplexSlice build_slice(ComplexKind complex, std::optional<GenusMarked> filter, bool connected, int max_edges,
                         Execution ex, int euler_bound) {
  if (max_edges < 1) throw std::invalid_argument("build_slice: max edges must be at least 1");
  ComplexSlice s;
  s.complex = complex;
  s.filter = filter;
  s.connected = connected;
  s.euler_bound = euler_bound;
  s.max_edges = max_edges;
  s.basis.resize(static_cast<std::size_t>(max_edges + 1));
  for (int k = 1; k <= max_edges; ++k) {
    EnumerationOptions opt;
    opt.edges = k;
    opt.filter = filter;
    opt.complex = complex;
    opt.connected = connected;
    opt.euler_bound = euler_bound;
    opt.execution = ex;
    s.basis[static_cast<std::size_t>(k)] = enumerate(opt);
  }
  if (filter) {
    s.truncated = max_edges < max_edges_for(*filter) || !connected;
  } else {
    int top = 0;
    for (auto t : stable_types(euler_bound)) top = std::max(top, max_edges_for(t));
    s.truncated = max_edges < top || !connected;
  }
  s.boundary.resize(static_cast<std::size_t>(max_edges + 1));
  for (int k = 2; k <= max_edges; ++k)
    s.boundary[static_cast<std::size_t>(k)] = boundary_matrix(s.basis[static_cast<std::size_t>(k)],
                                                              s.basis[static_cast<std::size_t>(k - 1)], complex, ex);
  // degree 1 maps to the (omitted) degree 0
  s.boundary[1] = SparseMatrix(0, static_cast<int>(s.basis[1].size()));
  return s;
}

int HomologyTable::euler_cells() const {
  int x = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) x += (k % 2 == 0 ? 1 : -1) * dims[k];
  return x;
}

int HomologyTable::euler_betti() const {
  int x = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) x += (k % 2 == 0 ? 1 : -1) * betti[k];
  return x;
}

HomologyTable homology_ranks(const ComplexSlice& s, RankMethod method, Execution ex) {
  HomologyTable t;
  const std::size_t top = s.basis.size();
  t.dims.assign(top, 0);
  t.ranks.assign(top + 1, 0);
  t.betti.assign(top, 0);
  for (std::size_t k = 0; k < top; ++k) t.dims[k] = static_cast<int>(s.basis[k].size());
  std::vector<std::size_t> degrees;
  for (std::size_t k = 2; k < top; ++k) degrees.push_back(k);
  auto ranks = map_items(
      degrees,
      [&](std::size_t k) {
        return method == RankMethod::sparse ? rank_sparse(s.boundary[k]) : rank_dense(s.boundary[k]);
      },
      ex);
  for (std::size_t i = 0; i < degrees.size(); ++i) t.ranks[degrees[i]] = ranks[i];
  t.ranks.resize(top);
  // the top degree has no incoming differential inside the slice
  for (std::size_t k = 0; k < top; ++k) {
    const int incoming = k + 1 < top ? t.ranks[k + 1] : 0;
    t.betti[k] = t.dims[k] - t.ranks[k] - incoming;
  }
  return t;
}

std::vector<EulerRow> euler_table(ComplexKind complex, int max_edges, int euler_bound, Execution ex) {
  std::vector<EulerRow> out;
  for (auto t : stable_types(euler_bound)) {
    EulerRow row;
    row.type = t;
    row.cells.assign(static_cast<std::size_t>(max_edges + 1), 0);
    row.truncated = max_edges < max_edges_for(t);
    for (int k = 1; k <= max_edges; ++k) {
      EnumerationOptions opt;
      opt.edges = k;
      opt.filter = t;
      opt.complex = complex;
      opt.execution = ex;
      row.cells[static_cast<std::size_t>(k)] = static_cast<int>(enumerate(opt).size());
      row.alternating += (k % 2 == 0 ? 1 : -1) * row.cells[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<GraphCode> connected_components(const GraphCode& code) {
  std::vector<GraphCode> out;
  for (const auto& c : split_components(decode(code))) out.push_back(canonical_form(c).code);
  std::sort(out.begin(), out.end());
  return out;
}

GraphClass disjoint_union(const GraphCode& a, const GraphCode& b) {
  return canonical_form(disjoint_union(decode(a), decode(b)));
}

GraphChain multiply(const GraphChain& a, const GraphChain& b) {
  GraphChain out;
  for (const auto& [ca, qa] : a)
    for (const auto& [cb, qb] : b) {
      auto u = disjoint_union(ca, cb);
      if (!u.zero) out.add(u.code, qa * qb * u.sign);
    }
  return out;
}

}  // namespace srg
