#include "scgame/stab_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

Pauli Pauli::identity(int n) { return Pauli{make_row(n), make_row(n), false}; }

Pauli Pauli::x_on(int n, const BitRow& support) {
  if (support.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Pauli::x_on: support length mismatch");
  return Pauli{support, make_row(n), false};
}

Pauli Pauli::z_on(int n, const BitRow& support) {
  if (support.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Pauli::z_on: support length mismatch");
  return Pauli{make_row(n), support, false};
}

Pauli Pauli::single(int n, int qubit, char kind) {
  Pauli p = identity(n);
  switch (kind) {
    case 'X': p.x[qubit] = 1; break;
    case 'Z': p.z[qubit] = 1; break;
    case 'Y': p.x[qubit] = 1; p.z[qubit] = 1; break;
    default: throw std::invalid_argument("Pauli::single: kind must be X, Y or Z");
  }
  return p;
}

namespace {

// Phase exponent (power of i) contributed by multiplying single-qubit
// Paulis (x1,z1) * (x2,z2), following the usual tableau convention.
int phase_g(int x1, int z1, int x2, int z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return z2 - x2;          // Y
  if (x1 && !z1) return z2 * (2 * x2 - 1);  // X
  return x2 * (1 - 2 * z2);              // Z
}

}  // namespace

Tableau::Tableau(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("Tableau: need at least one qubit");
  xs_.assign(2 * n_, make_row(n_));
  zs_.assign(2 * n_, make_row(n_));
  r_.assign(2 * n_, 0);
  for (int i = 0; i < n_; ++i) {
    xs_[i][i] = 1;        // destabilizer X_i
    zs_[n_ + i][i] = 1;   // stabilizer Z_i
  }
}

void Tableau::rowsum(int h, int i) {
  int phase = 2 * r_[h] + 2 * r_[i];
  for (int j = 0; j < n_; ++j)
    phase += phase_g(xs_[i][j], zs_[i][j], xs_[h][j], zs_[h][j]);
  phase %= 4;
  if (phase < 0) phase += 4;
  r_[h] = static_cast<std::uint8_t>(phase / 2);  // products of commuting rows stay real
  xor_into(xs_[h], xs_[i]);
  xor_into(zs_[h], zs_[i]);
}

void Tableau::h(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][q] & zs_[i][q];
    std::swap(xs_[i][q], zs_[i][q]);
  }
}

void Tableau::s(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][q] & zs_[i][q];
    zs_[i][q] ^= xs_[i][q];
  }
}

void Tableau::sdg(int q) {
  s(q);
  z(q);
}

void Tableau::x(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= zs_[i][q];
}

void Tableau::z(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= xs_[i][q];
}

void Tableau::y(int q) {
  x(q);
  z(q);
}

void Tableau::cx(int control, int target) {
  if (control == target) throw std::invalid_argument("cx: control == target");
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= xs_[i][control] & zs_[i][target] &
             (xs_[i][target] ^ zs_[i][control] ^ 1);
    xs_[i][target] ^= xs_[i][control];
    zs_[i][control] ^= zs_[i][target];
  }
}

void Tableau::cz(int a, int b) {
  h(b);
  cx(a, b);
  h(b);
}

bool Tableau::measurement_is_deterministic(int qubit) const {
  for (int i = n_; i < 2 * n_; ++i)
    if (xs_[i][qubit]) return false;
  return true;
}

int Tableau::measure_z(int qubit, int forced) {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("measure_z: bad qubit");
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (xs_[i][qubit]) { p = i; break; }
  }
  if (p >= 0) {
    // Undetermined: collapse to the forced branch.
    for (int i = 0; i < 2 * n_; ++i)
      if (i != p && xs_[i][qubit]) rowsum(i, p);
    xs_[p - n_] = xs_[p];
    zs_[p - n_] = zs_[p];
    r_[p - n_] = r_[p];
    xs_[p] = make_row(n_);
    zs_[p] = make_row(n_);
    zs_[p][qubit] = 1;
    r_[p] = static_cast<std::uint8_t>(forced & 1);
    return forced & 1;
  }
  // Determined: accumulate the matching stabilizer combination in a scratch
  // row appended past the tableau.
  xs_.push_back(make_row(n_));
  zs_.push_back(make_row(n_));
  r_.push_back(0);
  const int scratch = 2 * n_;
  for (int i = 0; i < n_; ++i)
    if (xs_[i][qubit]) rowsum(scratch, i + n_);
  int outcome = r_[scratch];
  xs_.pop_back();
  zs_.pop_back();
  r_.pop_back();
  return outcome;
}

int Tableau::measure_x(int qubit, int forced) {
  h(qubit);
  int m = measure_z(qubit, forced);
  h(qubit);
  return m;
}

bool Tableau::stabilizes(const Pauli& p) const {
  if (p.x.size() != static_cast<std::size_t>(n_) ||
      p.z.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("stabilizes: operator size mismatch");
  // Solve for a generator combination matching the binary part.
  BitMatrix gen(n_);
  for (int i = 0; i < n_; ++i) {
    gen[i] = xs_[n_ + i];
    gen[i].insert(gen[i].end(), zs_[n_ + i].begin(), zs_[n_ + i].end());
  }
  BitRow target = p.x;
  target.insert(target.end(), p.z.begin(), p.z.end());
  auto combo = solve_combination(gen, target);
  if (!combo) return false;
  // Multiply the chosen generators and compare signs.
  BitRow ax = make_row(n_), az = make_row(n_);
  int phase = 0;
  for (int i = 0; i < n_; ++i) {
    if (!(*combo)[i]) continue;
    phase += 2 * r_[n_ + i];
    for (int j = 0; j < n_; ++j)
      phase += phase_g(xs_[n_ + i][j], zs_[n_ + i][j], ax[j], az[j]);
    xor_into(ax, xs_[n_ + i]);
    xor_into(az, zs_[n_ + i]);
  }
  phase %= 4;
  if (phase < 0) phase += 4;
  return phase == (p.negative ? 2 : 0);
}

std::vector<Pauli> Tableau::canonical_stabilizers() const {
  // Row-reduce the stabilizer half over the 2n symplectic columns while
  // multiplying rows (sign included) instead of xoring them blindly.
  struct Row { BitRow x, z; int r; };
  std::vector<Row> rows(n_);
  for (int i = 0; i < n_; ++i)
    rows[i] = Row{xs_[n_ + i], zs_[n_ + i], r_[n_ + i]};
  auto bit_at = [this](const Row& row, int col) -> std::uint8_t {
    return col < n_ ? row.x[col] : row.z[col - n_];
  };
  auto mul_into = [this](Row& h, const Row& i) {
    int phase = 2 * h.r + 2 * i.r;
    for (int j = 0; j < n_; ++j)
      phase += phase_g(i.x[j], i.z[j], h.x[j], h.z[j]);
    phase %= 4;
    if (phase < 0) phase += 4;
    h.r = phase / 2;
    xor_into(h.x, i.x);
    xor_into(h.z, i.z);
  };
  int pivot = 0;
  for (int col = 0; col < 2 * n_ && pivot < n_; ++col) {
    int sel = pivot;
    while (sel < n_ && !bit_at(rows[sel], col)) ++sel;
    if (sel == n_) continue;
    std::swap(rows[pivot], rows[sel]);
    for (int r2 = 0; r2 < n_; ++r2)
      if (r2 != pivot && bit_at(rows[r2], col)) mul_into(rows[r2], rows[pivot]);
    ++pivot;
  }
  std::vector<Pauli> out;
  out.reserve(n_);
  for (const auto& row : rows)
    out.push_back(Pauli{row.x, row.z, row.r != 0});
  return out;
}

bool Tableau::is_valid() const {
  // Destabilizer i must anticommute with stabilizer i and commute with every
  // other row; stabilizers must commute pairwise.
  auto symp = [this](int a, int b) {
    int v = 0;
    for (int j = 0; j < n_; ++j)
      v ^= (xs_[a][j] & zs_[b][j]) ^ (xs_[b][j] & zs_[a][j]);
    return v;
  };
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (symp(i, j) != 0) return false;                    // destab pairs
      if (symp(n_ + i, n_ + j) != 0) return false;          // stab pairs
      if (symp(i, n_ + j) != (i == j ? 1 : 0)) return false;
    }
  return true;
}

std::vector<UndetectedPattern> enumerate_undetected(const StabilizerTable& t,
                                                    int max_weight) {
  if (max_weight < 0 || max_weight > t.n)
    throw std::invalid_argument("enumerate_undetected: bad max_weight");
  std::vector<UndetectedPattern> out;
  std::vector<int> idx;
  // Lexicographic combinations of each weight in turn.
  for (int w = 1; w <= max_weight; ++w) {
    idx.assign(w, 0);
    for (int i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitRow pattern = row_from_support(t.n, idx);
      auto rec = evaluate_parities(t, Basis::X, pattern);
      if (is_zero(rec.syndrome)) {
        bool logical = !is_zero(rec.logical);
        out.push_back(UndetectedPattern{std::move(pattern), w, logical});
      }
      int i = w - 1;
      while (i >= 0 && idx[i] == t.n - w + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace scg
