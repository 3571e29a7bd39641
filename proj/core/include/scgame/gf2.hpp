#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace scg {

// Dense GF(2) vectors stored one bit per byte. Everything here operates on
// small matrices (n up to a few hundred), so clarity wins over bit packing.
using BitRow = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitRow>;

BitRow make_row(std::size_t n);
BitRow row_from_support(std::size_t n, const std::vector<int>& support);
BitRow row_from_support(std::size_t n, std::initializer_list<int> support);
std::vector<int> support_of(const BitRow& r);

void xor_into(BitRow& dst, const BitRow& src);
BitRow row_and(const BitRow& a, const BitRow& b);
int dot(const BitRow& a, const BitRow& b);  // overlap parity, 0 or 1
int weight(const BitRow& r);
bool is_zero(const BitRow& r);

// Reduced row echelon form in place; returns the rank. Zero rows are dropped,
// pivot columns are strictly increasing top to bottom, and each pivot column
// carries a single 1.
int rref(BitMatrix& m);

int rank(BitMatrix m);

// Coefficients c (one bit per row of m) with sum_i c_i * m_i == target, or
// nullopt if target lies outside the row span.
std::optional<BitRow> solve_combination(const BitMatrix& m, const BitRow& target);

bool in_span(const BitMatrix& m, const BitRow& target);

// All 2^rank elements of the row span, including zero. Brute force; intended
// for tests and small generator sets.
std::vector<BitRow> span(const BitMatrix& m);

}  // namespace scg
