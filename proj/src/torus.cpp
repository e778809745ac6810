#include "equivknot/torus.hpp"

#include <algorithm>
#include <numeric>

namespace equivknot {
namespace {

void check_torus(int p, int q) {
  if (p < 2 || q < 2) throw Error("torus knot parameters must be at least 2");
  if (std::gcd(p, q) != 1) {
    throw Error("T(" + std::to_string(p) + "," + std::to_string(q) + ") is a link: parameters are not coprime");
  }
  if (p % 2 == 0 && q % 2 == 0) throw Error("torus knot parameters cannot both be even");
}

}  // namespace

TorusParameters normalize_torus(int p, int q) {
  check_torus(p, q);
  if (p % 2 == 0) return {q, p};
  if (q % 2 == 0) return {p, q};
  return {std::min(p, q), std::max(p, q)};
}

IntravergentBraid torus_braid(int p, int q) {
  const TorusParameters t = normalize_torus(p, q);
  std::vector<Generator> letters;
  letters.reserve(static_cast<std::size_t>((t.strands - 1) * t.twists));
  for (int r = 0; r < t.twists; ++r) {
    for (int i = 1; i < t.strands; ++i) letters.push_back(sigma(i));
  }
  return IntravergentBraid(BraidWord(t.strands, std::move(letters)));
}

int torus_equivariant_unknotting_number(int p, int q) {
  check_torus(p, q);
  return (p - 1) * (q - 1) / 2;
}

}  // namespace equivknot
