#include "scgame/css_code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("stabilizer table: " + what);
}

void check_block(const BitMatrix& m, std::size_t n, const char* name) {
  for (const auto& row : m) {
    require(row.size() == n, std::string(name) + " row length != n");
    require(!is_zero(row), std::string(name) + " contains a zero row");
  }
}

}  // namespace

void validate(const StabilizerTable& t) {
  require(t.n > 0, "n must be positive");
  require(t.k >= 0 && t.k <= t.n, "k out of range");
  require(t.d >= 1, "d must be positive");
  const auto n = static_cast<std::size_t>(t.n);
  check_block(t.x_rows, n, "x_rows");
  check_block(t.z_rows, n, "z_rows");
  check_block(t.logical_x, n, "logical_x");
  check_block(t.logical_z, n, "logical_z");
  require(t.m_x() + t.m_z() == t.n - t.k, "m_x + m_z != n - k");
  require(static_cast<int>(t.logical_x.size()) == t.k, "logical_x count != k");
  require(static_cast<int>(t.logical_z.size()) == t.k, "logical_z count != k");

  require(rank(t.x_rows) == t.m_x(), "x_rows not independent");
  require(rank(t.z_rows) == t.m_z(), "z_rows not independent");

  // X and Z operators commute iff their supports overlap evenly.
  for (const auto& x : t.x_rows)
    for (const auto& z : t.z_rows)
      require(dot(x, z) == 0, "x/z stabilizers do not commute");
  for (const auto& lx : t.logical_x)
    for (const auto& z : t.z_rows)
      require(dot(lx, z) == 0, "logical X violates a Z stabilizer");
  for (const auto& lz : t.logical_z)
    for (const auto& x : t.x_rows)
      require(dot(lz, x) == 0, "logical Z violates an X stabilizer");
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j)
      require(dot(t.logical_x[i], t.logical_z[j]) == (i == j ? 1 : 0),
              "logical pairing is not delta_ij");

  // Logicals must not be absorbed by the stabilizer group.
  BitMatrix xs = t.x_rows;
  for (const auto& lx : t.logical_x) xs.push_back(lx);
  require(rank(xs) == t.m_x() + t.k, "a logical X lies in the X stabilizer span");
  BitMatrix zs = t.z_rows;
  for (const auto& lz : t.logical_z) zs.push_back(lz);
  require(rank(zs) == t.m_z() + t.k, "a logical Z lies in the Z stabilizer span");
}

StabilizerTable standard_form(const StabilizerTable& t) {
  StabilizerTable s = t;
  rref(s.x_rows);
  rref(s.z_rows);
  return s;
}

bool is_standard_form(const StabilizerTable& t) {
  StabilizerTable s = standard_form(t);
  return s.x_rows == t.x_rows && s.z_rows == t.z_rows;
}

StabilizerTable steane7() {
  StabilizerTable t;
  t.n = 7;
  t.k = 1;
  t.d = 3;
  // Hamming [7,4] parity checks; qubit q participates in check j when bit j
  // of q+1 is set.
  const std::vector<std::vector<int>> checks = {
      {0, 2, 4, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}};
  for (const auto& c : checks) {
    t.x_rows.push_back(row_from_support(7, c));
    t.z_rows.push_back(row_from_support(7, c));
  }
  t.logical_x.push_back(row_from_support(7, {0, 1, 2, 3, 4, 5, 6}));
  t.logical_z.push_back(row_from_support(7, {0, 1, 2, 3, 4, 5, 6}));
  validate(t);
  return t;
}

StabilizerTable reed_muller15() {
  StabilizerTable t;
  t.n = 15;
  t.k = 1;
  t.d = 3;
  // Evaluation vectors of the four coordinate functions on {1..15}: qubit q
  // lies in v_j when bit j of q+1 is set. Each has weight 8.
  BitMatrix v(4);
  for (int j = 0; j < 4; ++j) {
    v[j] = make_row(15);
    for (int q = 0; q < 15; ++q)
      if ((q + 1) & (1 << j)) v[j][q] = 1;
  }
  t.x_rows = v;
  // The Z stabilizer group is spanned by the v_j and their pairwise products
  // (weight 4); ten generators total. Stored row-reduced so the shipped
  // table is its own standard form.
  BitMatrix z = v;
  for (int j = 0; j < 4; ++j)
    for (int l = j + 1; l < 4; ++l) z.push_back(row_and(v[j], v[l]));
  rref(z);
  t.z_rows = z;
  t.logical_x.push_back(BitRow(15, 1));
  t.logical_z.push_back(row_from_support(15, {0, 1, 2}));
  validate(t);
  return t;
}

StabilizerTable rotated_surface(int d) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("rotated_surface: d must be odd and >= 3");
  StabilizerTable t;
  t.n = d * d;
  t.k = 1;
  t.d = d;
  auto q = [d](int r, int c) { return r * d + c; };
  // Bulk faces anchored at their top-left data qubit; checkerboard type.
  for (int a = 0; a + 1 < d; ++a) {
    for (int b = 0; b + 1 < d; ++b) {
      BitRow row = row_from_support(
          t.n, {q(a, b), q(a, b + 1), q(a + 1, b), q(a + 1, b + 1)});
      if ((a + b) % 2 == 1)
        t.x_rows.push_back(row);
      else
        t.z_rows.push_back(row);
    }
  }
  // Boundary pairs, placed so every X/Z overlap stays even: X pairs on the
  // top (even columns) and bottom (odd columns), Z pairs on the left (odd
  // rows) and right (even rows).
  for (int b = 0; b + 1 < d; b += 2)
    t.x_rows.push_back(row_from_support(t.n, {q(0, b), q(0, b + 1)}));
  for (int b = 1; b + 1 < d; b += 2)
    t.x_rows.push_back(row_from_support(t.n, {q(d - 1, b), q(d - 1, b + 1)}));
  for (int a = 1; a + 1 < d; a += 2)
    t.z_rows.push_back(row_from_support(t.n, {q(a, 0), q(a + 1, 0)}));
  for (int a = 0; a + 1 < d; a += 2)
    t.z_rows.push_back(row_from_support(t.n, {q(a, d - 1), q(a + 1, d - 1)}));

  BitRow lx = make_row(t.n), lz = make_row(t.n);
  for (int r = 0; r < d; ++r) lx[q(r, 0)] = 1;  // left column
  for (int c = 0; c < d; ++c) lz[q(0, c)] = 1;  // top row
  t.logical_x.push_back(lx);
  t.logical_z.push_back(lz);
  validate(t);
  return t;
}

StabilizerTable builtin_code(const std::string& name) {
  if (name == "steane7") return steane7();
  if (name == "reed_muller15") return reed_muller15();
  const std::string prefix = "rotated_surface_";
  if (name.rfind(prefix, 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin_code: bad distance in '" + name + "'");
    }
    return rotated_surface(d);
  }
  throw std::invalid_argument("builtin_code: unknown code '" + name + "'");
}

MeasurementRecord evaluate_parities(const StabilizerTable& t, Basis basis,
                                    const BitRow& pattern) {
  if (pattern.size() != static_cast<std::size_t>(t.n))
    throw std::invalid_argument("evaluate_parities: pattern length != n");
  const BitMatrix& checks = (basis == Basis::X) ? t.x_rows : t.z_rows;
  const BitMatrix& logicals = (basis == Basis::X) ? t.logical_x : t.logical_z;
  MeasurementRecord rec;
  for (const auto& row : checks)
    rec.syndrome.push_back(static_cast<std::uint8_t>(dot(row, pattern)));
  for (const auto& row : logicals)
    rec.logical.push_back(static_cast<std::uint8_t>(dot(row, pattern)));
  return rec;
}

namespace {

BitRow parse_code_row(const std::string& line, int n, char symbol, int lineno) {
  if (static_cast<int>(line.size()) != n)
    throw std::invalid_argument("code table line " + std::to_string(lineno) +
                                ": expected " + std::to_string(n) + " symbols");
  BitRow r = make_row(n);
  for (int i = 0; i < n; ++i) {
    char c = line[i];
    if (c == 'I') continue;
    if (c == symbol) {
      r[i] = 1;
    } else {
      throw std::invalid_argument("code table line " + std::to_string(lineno) +
                                  ": unexpected symbol '" + std::string(1, c) +
                                  "'");
    }
  }
  return r;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

StabilizerTable load_code_table(std::istream& in) {
  StabilizerTable t;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  // Sections in order: X rows, Z rows, logical X, logical Z.
  int section = 0;
  const char section_symbol[4] = {'X', 'Z', 'X', 'Z'};
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> t.n >> t.k >> t.d))
        throw std::invalid_argument("code table line " + std::to_string(lineno) +
                                    ": bad header, expected 'n k d'");
      std::string rest;
      if (hs >> rest)
        throw std::invalid_argument("code table line " + std::to_string(lineno) +
                                    ": trailing tokens after header");
      have_header = true;
      continue;
    }
    if (line == "%") {
      ++section;
      if (section > 3)
        throw std::invalid_argument("code table line " + std::to_string(lineno) +
                                    ": too many '%' separators");
      continue;
    }
    BitRow r = parse_code_row(line, t.n, section_symbol[section], lineno);
    switch (section) {
      case 0: t.x_rows.push_back(std::move(r)); break;
      case 1: t.z_rows.push_back(std::move(r)); break;
      case 2: t.logical_x.push_back(std::move(r)); break;
      default: t.logical_z.push_back(std::move(r)); break;
    }
  }
  if (!have_header) throw std::invalid_argument("code table: empty input");
  if (section != 3)
    throw std::invalid_argument("code table: expected 3 '%' separators, saw " +
                                std::to_string(section));
  validate(t);
  return t;
}

StabilizerTable load_code_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open code table file: " + path);
  return load_code_table(f);
}

std::string format_code_table(const StabilizerTable& t) {
  std::ostringstream out;
  out << t.n << ' ' << t.k << ' ' << t.d << '\n';
  auto emit = [&](const BitMatrix& rows, char symbol) {
    for (const auto& row : rows) {
      for (auto b : row) out << (b ? symbol : 'I');
      out << '\n';
    }
  };
  emit(t.x_rows, 'X');
  out << "%\n";
  emit(t.z_rows, 'Z');
  out << "%\n";
  emit(t.logical_x, 'X');
  out << "%\n";
  emit(t.logical_z, 'Z');
  return out.str();
}

}  // namespace scg
