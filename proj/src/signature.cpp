#include "equivknot/signature.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace equivknot {
namespace {

using Rows = std::vector<std::vector<BigInt>>;

void require_nonnegative(long long a, long long b) {
  if (a < 0 || b < 0) throw Error("bounds take nonnegative inputs");
}

// Divides every entry by the gcd of all entries. Positive scaling keeps the inertia.
void reduce_content(Rows& a) {
  BigInt g = 0;
  for (const auto& row : a)
    for (const auto& x : row) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& row : a)
      for (auto& x : row) x /= g;
  }
}

Rows without(const Rows& a, std::size_t i, std::size_t j) {
  Rows out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == i || r == j) continue;
    std::vector<BigInt> row;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (c != i && c != j) row.push_back(a[r][c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

SymmetricIntegerMatrix::SymmetricIntegerMatrix(Rows rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw Error("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows_[i][j] != rows_[j][i]) {
        throw Error("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

SymmetricIntegerMatrix::SymmetricIntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : SymmetricIntegerMatrix([&] {
        Rows out;
        for (const auto& row : rows) out.emplace_back(row.begin(), row.end());
        return out;
      }()) {}

Inertia matrix_signature(const SymmetricIntegerMatrix& m) {
  Inertia inertia;
  Rows a = m.rows();
  // `flipped` tracks whether the current block is a negative multiple of the
  // Schur complement it stands for.
  bool flipped = false;
  auto count = [&](int sign) {
    if (sign == 0) {
      ++inertia.n_zero;
    } else if ((sign > 0) != flipped) {
      ++inertia.n_plus;
    } else {
      ++inertia.n_minus;
    }
  };

  while (!a.empty()) {
    const std::size_t k = a.size();
    // Pivot on the nonzero diagonal entry of least magnitude.
    std::size_t pivot = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i][i] != 0 && (pivot == k || abs(a[i][i]) < abs(a[pivot][pivot]))) pivot = i;
    }
    if (pivot < k) {
      const BigInt d = a[pivot][pivot];
      count(d > 0 ? 1 : -1);
      // d * (A' - v v^T / d) = d A' - v v^T.
      Rows next = without(a, pivot, pivot);
      std::vector<BigInt> v;
      for (std::size_t r = 0; r < k; ++r)
        if (r != pivot) v.push_back(a[r][pivot]);
      for (std::size_t r = 0; r < next.size(); ++r)
        for (std::size_t c = 0; c < next.size(); ++c) next[r][c] = d * next[r][c] - v[r] * v[c];
      if (d < 0) flipped = !flipped;
      a = std::move(next);
      reduce_content(a);
      continue;
    }
    // Zero diagonal: use a 2x2 block [[0, b], [b, 0]], which has inertia (1, 1).
    std::size_t pi = k, pj = k;
    for (std::size_t i = 0; i < k && pi == k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == k) {
      inertia.n_zero += k;
      break;
    }
    ++inertia.n_plus;
    ++inertia.n_minus;
    const BigInt b = a[pi][pj];
    // b * (A' - (u w^T + w u^T) / b) with u, w the pivot columns.
    Rows next = without(a, pi, pj);
    std::vector<BigInt> u, w;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == pi || r == pj) continue;
      u.push_back(a[r][pi]);
      w.push_back(a[r][pj]);
    }
    for (std::size_t r = 0; r < next.size(); ++r)
      for (std::size_t c = 0; c < next.size(); ++c) next[r][c] = b * next[r][c] - (u[r] * w[c] + w[r] * u[c]);
    if (b < 0) flipped = !flipped;
    a = std::move(next);
    reduce_content(a);
  }
  return inertia;
}

SymmetricIntegerMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto integers = [&]() {
    std::istringstream tokens(line);
    std::vector<BigInt> values;
    std::string token;
    while (tokens >> token) {
      const bool negative = token.front() == '-';
      const std::string digits = negative ? token.substr(1) : token;
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      }
      BigInt value(digits);
      values.push_back(negative ? BigInt(-value) : value);
    }
    return values;
  };

  if (!next_line()) throw ParseError("matrix file is empty");
  const auto header = integers();
  if (header.size() != 1 || header[0] < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected the dimension n");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  Rows rows;
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    auto row = integers();
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries, found " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (next_line()) throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing data");
  try {
    return SymmetricIntegerMatrix(std::move(rows));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

SymmetricIntegerMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  return read_matrix(in);
}

SymmetricIntegerMatrix goeritz_jm(long long m) {
  return SymmetricIntegerMatrix{{7, -1, 0}, {-1, 2 * m + 3, -1}, {0, -1, 7}};
}

long long signature_q2_jm(long long m) { return matrix_signature(goeritz_jm(m)).signature() - (2 * m + 3); }

SymmetricIntegerMatrix torus_two_strand_form(int k) {
  if (k < 0) throw Error("T(2, 2k+1) needs k >= 0");
  const auto n = static_cast<std::size_t>(2 * k);
  Rows rows(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 2;
    if (i + 1 < n) rows[i][i + 1] = rows[i + 1][i] = -1;
  }
  return SymmetricIntegerMatrix(std::move(rows));
}

long long unknotting_lower_bound(long long signature_magnitude) {
  if (signature_magnitude < 0) throw Error("signature magnitude must be nonnegative");
  return (signature_magnitude + 1) / 2;
}

long long type_A_lower(long long u_q1, long long u_q2) {
  require_nonnegative(u_q1, u_q2);
  return std::max(u_q1, u_q2);
}

long long type_B_lower(long long u4_q1, long long u4_q2) {
  require_nonnegative(u4_q1, u4_q2);
  return u4_q1 + u4_q2;
}

long long type_C_lower(long long unb_q1, long long unb_q2) {
  require_nonnegative(unb_q1, unb_q2);
  return unb_q1 + unb_q2;
}

}  // namespace equivknot
