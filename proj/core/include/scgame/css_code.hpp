#pragma once

#include <iosfwd>
#include <string>

#include "scgame/gf2.hpp"

namespace scg {

// Binary table of a CSS code: X and Z stabilizer generators plus logical
// operator representatives. X-type rows act as X on their support, Z-type
// rows as Z; a pure CSS table never mixes the two in one row.
struct StabilizerTable {
  int n = 0;
  int k = 0;
  int d = 0;
  BitMatrix x_rows;     // m_x X-type generators
  BitMatrix z_rows;     // m_z Z-type generators
  BitMatrix logical_x;  // k rows, X-type representatives
  BitMatrix logical_z;  // k rows, Z-type representatives

  int m_x() const { return static_cast<int>(x_rows.size()); }
  int m_z() const { return static_cast<int>(z_rows.size()); }

  bool operator==(const StabilizerTable&) const = default;
};

enum class Basis { X, Z };

// Parities of a flip pattern against the same-basis checks and logicals.
struct MeasurementRecord {
  BitRow syndrome;  // one bit per check row of the chosen basis
  BitRow logical;   // one bit per logical representative
};

// Checks counts (m_x + m_z == n - k), generator independence, stabilizer
// commutation, and logical pairing <Xbar_i, Zbar_j> = delta_ij. Throws
// std::invalid_argument describing the first failure.
void validate(const StabilizerTable& t);

// Row-reduces the X and Z blocks independently (reduced row echelon form,
// pivot columns left to right). The stabilizer group and the logical
// representatives are unchanged; only the generator basis is.
StabilizerTable standard_form(const StabilizerTable& t);
bool is_standard_form(const StabilizerTable& t);

StabilizerTable steane7();
StabilizerTable reed_muller15();
StabilizerTable rotated_surface(int d);

// Accepts "steane7", "reed_muller15", "rotated_surface_<d>".
StabilizerTable builtin_code(const std::string& name);

MeasurementRecord evaluate_parities(const StabilizerTable& t, Basis basis,
                                    const BitRow& pattern);

// Text format: a header line "n k d", then one row per line over {I,X,Z},
// with '%' lines separating the four sections in order: X stabilizer rows,
// Z stabilizer rows, logical X rows, logical Z rows. '#' starts a comment.
StabilizerTable load_code_table(std::istream& in);
StabilizerTable load_code_table_file(const std::string& path);
std::string format_code_table(const StabilizerTable& t);

}  // namespace scg
