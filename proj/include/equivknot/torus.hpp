#pragma once

#include "equivknot/intravergent.hpp"

namespace equivknot {

struct TorusParameters {
  int strands;  // odd parameter, used as the strand count
  int twists;   // the other parameter, number of repetitions of sigma_1 ... sigma_{strands-1}
};

// Puts T(p, q) in the form used for the braid: the odd parameter (the smaller
// one when both are odd) becomes the strand count.
TorusParameters normalize_torus(int p, int q);

// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands, p odd after normalization.
IntravergentBraid torus_braid(int p, int q);

// (p-1)(q-1)/2.
int torus_equivariant_unknotting_number(int p, int q);

}  // namespace equivknot
