#pragma once

#include <vector>

#include "scgame/css_code.hpp"
#include "scgame/gf2.hpp"

namespace scg {

// n-qubit Pauli in binary symplectic form with a sign.
struct Pauli {
  BitRow x;
  BitRow z;
  bool negative = false;

  static Pauli identity(int n);
  static Pauli x_on(int n, const BitRow& support);
  static Pauli z_on(int n, const BitRow& support);
  static Pauli single(int n, int qubit, char kind);  // kind in {'X','Y','Z'}

  bool operator==(const Pauli&) const = default;
};

// Stabilizer tableau over destabilizer/stabilizer rows with sign bits.
// Gates are exact Clifford updates; measurement never samples. When an
// outcome is undetermined the state collapses to the caller-chosen branch,
// which keeps replays reproducible.
class Tableau {
 public:
  explicit Tableau(int n);  // |0...0>

  int num_qubits() const { return n_; }

  void h(int q);
  void s(int q);
  void sdg(int q);
  void x(int q);
  void y(int q);
  void z(int q);
  void cx(int control, int target);
  void cz(int a, int b);

  // Returns the outcome bit. Deterministic outcomes ignore `forced`;
  // undetermined ones collapse to `forced`.
  int measure_z(int qubit, int forced = 0);
  int measure_x(int qubit, int forced = 0);
  bool measurement_is_deterministic(int qubit) const;

  // True iff pauli (with its sign) lies in the stabilizer group.
  bool stabilizes(const Pauli& p) const;

  // Sign-tracked row reduction of the stabilizer rows; equal stabilizer
  // groups produce identical canonical generator lists.
  std::vector<Pauli> canonical_stabilizers() const;

  // Symplectic inner product checks used by the validity property tests.
  bool is_valid() const;

 private:
  int n_;
  // Rows 0..n-1 destabilizers, n..2n-1 stabilizers.
  BitMatrix xs_, zs_;
  std::vector<std::uint8_t> r_;

  void rowsum(int h, int i);
};

// Z-flip pattern on the data qubits of a CSS table that produces zero
// syndrome on every X check. `logical` marks patterns that flip at least
// one X logical parity.
struct UndetectedPattern {
  BitRow pattern;
  int weight = 0;
  bool logical = false;
};

// All zero-syndrome patterns with 1 <= weight <= max_weight, in increasing
// (weight, lexicographic) order. Brute force over supports.
std::vector<UndetectedPattern> enumerate_undetected(const StabilizerTable& t,
                                                    int max_weight);

}  // namespace scg
