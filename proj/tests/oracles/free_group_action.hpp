#pragma once

// The Artin representation of B_s in Aut(F_s). It is faithful, so two words
// are equal in the braid group exactly when they act identically on the free
// generators. Shares no code with the Garside normal form.

#include <vector>

#include "equivknot/braid.hpp"

namespace oracle {

// Reduced free-group word; +k is x_k, -k its inverse.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Image of x_k under the automorphism of sigma_i (or its inverse).
//   sigma_i:      x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   sigma_i^-1:   x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
inline FreeWord generator_image(const equivknot::Generator& g, int k) {
  const int i = g.index;
  if (g.positive) {
    if (k == i) return {i, i + 1, -i};
    if (k == i + 1) return {i};
  } else {
    if (k == i) return {i + 1};
    if (k == i + 1) return {-(i + 1), i, i + 1};
  }
  return {k};
}

// images[k-1] is the image of x_k under the action of the whole word.
inline std::vector<FreeWord> artin_action(const equivknot::BraidWord& w) {
  const int s = w.strands();
  std::vector<FreeWord> images(s);
  for (int k = 1; k <= s; ++k) images[k - 1] = {k};
  for (const auto& g : w.letters()) {
    // Compose with the letter's automorphism by substituting into every image.
    std::vector<FreeWord> next(s);
    for (int k = 0; k < s; ++k) {
      for (int letter : images[k]) {
        const FreeWord sub = letter > 0 ? generator_image(g, letter) : invert(generator_image(g, -letter));
        for (int x : sub) push_reduced(next[k], x);
      }
    }
    images = std::move(next);
  }
  return images;
}

inline bool artin_equal(const equivknot::BraidWord& a, const equivknot::BraidWord& b) {
  return a.strands() == b.strands() && artin_action(a) == artin_action(b);
}

}  // namespace oracle
