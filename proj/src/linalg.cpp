#include "srg/linalg.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace srg {

void SparseMatrix::add(int row, int col, const Rational& v) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("SparseMatrix::add");
  if (v != 0) raw_.push_back(MatrixEntry{row, col, v});
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& e : raw_) acc[{e.col, e.row}] += e.value;
  std::vector<MatrixEntry> out;
  for (const auto& [k, v] : acc)
    if (v != 0) out.push_back(MatrixEntry{k.second, k.first, v});
  return out;
}

std::size_t SparseMatrix::nonzeros() const { return entries().size(); }

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
  std::vector<std::vector<std::pair<int, Rational>>> by_row(static_cast<std::size_t>(rhs.rows_));
  for (const auto& e : rhs.entries()) by_row[static_cast<std::size_t>(e.row)].push_back({e.col, e.value});
  SparseMatrix out(rows_, rhs.cols_);
  for (const auto& e : entries())
    for (const auto& [c, v] : by_row[static_cast<std::size_t>(e.col)]) out.add(e.row, c, e.value * v);
  return out;
}

SparseMatrix SparseMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
  SparseMatrix out(rows_, cols_);
  for (const auto& e : entries())
    out.add(row_perm.at(static_cast<std::size_t>(e.row)), col_perm.at(static_cast<std::size_t>(e.col)), e.value);
  return out;
}

void SparseMatrix::write_triplets(std::ostream& os) const {
  auto es = entries();
  os << rows_ << ' ' << cols_ << ' ' << es.size() << '\n';
  for (const auto& e : es) os << e.row << ' ' << e.col << ' ' << to_string(e.value) << '\n';
}

namespace {

using Row = std::vector<std::pair<int, mpz_class>>;  // sorted by column

void make_primitive(Row& r) {
  mpz_class g = 0;
  for (const auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target := p * target - t * pivot_row, where t is target's entry at the pivot column.
void eliminate(Row& target, const Row& pivot_row, int col, const mpz_class& p) {
  auto it = std::find_if(target.begin(), target.end(), [&](const auto& e) { return e.first == col; });
  if (it == target.end()) return;
  const mpz_class t = it->second;
  Row out;
  out.reserve(target.size() + pivot_row.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot_row.size()) {
    if (j == pivot_row.size() || (i < target.size() && target[i].first < pivot_row[j].first)) {
      out.push_back({target[i].first, p * target[i].second});
      ++i;
    } else if (i == target.size() || pivot_row[j].first < target[i].first) {
      out.push_back({pivot_row[j].first, -t * pivot_row[j].second});
      ++j;
    } else {
      mpz_class v = p * target[i].second - t * pivot_row[j].second;
      if (v != 0) out.push_back({target[i].first, v});
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

}  // namespace

int rank_sparse(const SparseMatrix& m) {
  // integer rows: clear denominators row by row
  std::vector<std::map<int, Rational>> rational_rows(static_cast<std::size_t>(m.rows()));
  for (const auto& e : m.entries()) rational_rows[static_cast<std::size_t>(e.row)][e.col] = e.value;
  std::vector<Row> rows;
  for (auto& rr : rational_rows) {
    if (rr.empty()) continue;
    mpz_class l = 1;
    for (const auto& [c, v] : rr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Row r;
    for (const auto& [c, v] : rr) {
      mpq_class s = v * l;
      r.push_back({c, s.get_num()});
    }
    make_primitive(r);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  std::vector<char> used(rows.size(), 0);
  while (true) {
    // pivot row: the sparsest remaining nonzero row; pivot column: its sparsest-column entry
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && !rows[i].empty() && (best == rows.size() || rows[i].size() < rows[best].size())) best = i;
    if (best == rows.size()) break;
    std::map<int, int> col_count;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i])
        for (const auto& [c, v] : rows[i]) ++col_count[c];
    int col = rows[best].front().first;
    for (const auto& [c, v] : rows[best])
      if (col_count[c] < col_count[col]) col = c;
    used[best] = 1;
    ++rank;
    const mpz_class p = std::find_if(rows[best].begin(), rows[best].end(), [&](const auto& e) { return e.first == col; })->second;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i]) eliminate(rows[i], rows[best], col, p);
  }
  return rank;
}

int rank_dense(const SparseMatrix& m) {
  const auto R = static_cast<std::size_t>(m.rows()), C = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
  for (const auto& e : m.entries()) a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < C; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace srg
