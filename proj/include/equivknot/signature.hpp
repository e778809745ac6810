#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "equivknot/two_bridge.hpp"

namespace equivknot {

class SymmetricIntegerMatrix {
 public:
  SymmetricIntegerMatrix() = default;
  // Throws if the rows do not form a square symmetric matrix.
  explicit SymmetricIntegerMatrix(std::vector<std::vector<BigInt>> rows);
  SymmetricIntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

  friend bool operator==(const SymmetricIntegerMatrix&, const SymmetricIntegerMatrix&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long long signature() const noexcept {
    return static_cast<long long>(n_plus) - static_cast<long long>(n_minus);
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact inertia by symmetric fraction-free elimination.
Inertia matrix_signature(const SymmetricIntegerMatrix& m);

// First line n, then n rows of n integers. Throws ParseError with the line.
SymmetricIntegerMatrix read_matrix(std::istream& in);
SymmetricIntegerMatrix read_matrix_file(const std::filesystem::path& path);

// Goeritz matrix of q2(J_m^+): diagonal (7, 2m+3, 7), off-diagonal -1.
SymmetricIntegerMatrix goeritz_jm(long long m);
// sigma(goeritz_jm(m)) - (2m + 3).
long long signature_q2_jm(long long m);

// Tridiagonal 2k x 2k form (2 on the diagonal, -1 beside it) of the standard
// diagram of T(2, 2k+1), colored so that the bigons are the white regions.
SymmetricIntegerMatrix torus_two_strand_form(int k);

// ceil(|sigma| / 2).
long long unknotting_lower_bound(long long signature_magnitude);

long long type_A_lower(long long u_q1, long long u_q2);
long long type_B_lower(long long u4_q1, long long u4_q2);
long long type_C_lower(long long unb_q1, long long unb_q2);

}  // namespace equivknot
