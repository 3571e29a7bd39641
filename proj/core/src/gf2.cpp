#include "scgame/gf2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scg {

BitRow make_row(std::size_t n) { return BitRow(n, 0); }

BitRow row_from_support(std::size_t n, const std::vector<int>& support) {
  BitRow r(n, 0);
  for (int q : support) {
    if (q < 0 || static_cast<std::size_t>(q) >= n)
      throw std::out_of_range("row_from_support: index out of range");
    r[q] ^= 1;
  }
  return r;
}

BitRow row_from_support(std::size_t n, std::initializer_list<int> support) {
  return row_from_support(n, std::vector<int>(support));
}

std::vector<int> support_of(const BitRow& r) {
  std::vector<int> s;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) s.push_back(static_cast<int>(i));
  return s;
}

void xor_into(BitRow& dst, const BitRow& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("xor_into: size mismatch");
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

BitRow row_and(const BitRow& a, const BitRow& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row_and: size mismatch");
  BitRow r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

int dot(const BitRow& a, const BitRow& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  int p = 0;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= (a[i] & b[i]);
  return p;
}

int weight(const BitRow& r) {
  int w = 0;
  for (auto b : r) w += b;
  return w;
}

bool is_zero(const BitRow& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint8_t b) { return b == 0; });
}

int rref(BitMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && !m[sel][col]) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[pivot_row], m[sel]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != pivot_row && m[r][col]) xor_into(m[r], m[pivot_row]);
    }
    ++pivot_row;
  }
  m.erase(m.begin() + pivot_row, m.end());
  return static_cast<int>(pivot_row);
}

int rank(BitMatrix m) { return rref(m); }

std::optional<BitRow> solve_combination(const BitMatrix& m, const BitRow& target) {
  // Gaussian elimination on rows of m with an identity tag tracking the
  // combination; then reduce the target against the eliminated rows.
  const std::size_t nrows = m.size();
  BitMatrix work = m;
  BitMatrix tag(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    tag[i] = make_row(nrows);
    tag[i][i] = 1;
  }
  const std::size_t cols = target.size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < cols && pivot_row < nrows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < nrows && !work[sel][col]) ++sel;
    if (sel == nrows) continue;
    std::swap(work[pivot_row], work[sel]);
    std::swap(tag[pivot_row], tag[sel]);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r != pivot_row && work[r][col]) {
        xor_into(work[r], work[pivot_row]);
        xor_into(tag[r], tag[pivot_row]);
      }
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }
  BitRow residue = target;
  BitRow combo = make_row(nrows);
  for (std::size_t r = 0; r < pivot_row; ++r) {
    if (residue[pivot_col_of_row[r]]) {
      xor_into(residue, work[r]);
      xor_into(combo, tag[r]);
    }
  }
  if (!is_zero(residue)) return std::nullopt;
  return combo;
}

bool in_span(const BitMatrix& m, const BitRow& target) {
  return solve_combination(m, target).has_value();
}

std::vector<BitRow> span(const BitMatrix& m) {
  BitMatrix basis = m;
  int r = rref(basis);
  if (r > 20) throw std::invalid_argument("span: rank too large to enumerate");
  std::vector<BitRow> out;
  const std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    BitRow v = make_row(n);
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) xor_into(v, basis[i]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace scg
