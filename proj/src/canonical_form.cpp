#include "equivknot/canonical_form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equivknot {
namespace {

// A simple braid is a permutation p; the braid word s_{i1}...s_{ik} maps to the
// product p = s_{i1} * ... * s_{ik} with (p * q)[x] = p[q[x]]. Right
// multiplication by s_i swaps entries i-1 and i; left multiplication swaps the
// values i-1 and i.
using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = n - 1 - x;
  return p;
}

Perm inverse_of(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return inv;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Perm flip(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(p.size());
  for (int x = 0; x < n; ++x) q[static_cast<std::size_t>(x)] = n - 1 - p[static_cast<std::size_t>(n - 1 - x)];
  return q;
}

// Makes (a, b) left-weighted: moves every generator that starts b but does not
// finish a across the boundary. Returns true if anything moved.
bool left_weight(Perm& a, Perm& b) {
  const std::size_t n = a.size();
  bool changed = false;
  Perm b_inv = inverse_of(b);
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 1; i < n; ++i) {
      const bool starts_b = b_inv[i - 1] > b_inv[i];
      const bool finishes_a = a[i - 1] > a[i];
      if (starts_b && !finishes_a) {
        std::swap(a[i - 1], a[i]);
        // b <- s_i * b: swap values i-1 and i.
        std::swap(b[static_cast<std::size_t>(b_inv[i - 1])], b[static_cast<std::size_t>(b_inv[i])]);
        std::swap(b_inv[i - 1], b_inv[i]);
        moved = changed = true;
      }
    }
  }
  return changed;
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n) : n_(n), delta_(delta_perm(n)) {}

  void multiply_positive(int index) {
    Perm x = identity_perm(n_);
    std::swap(x[static_cast<std::size_t>(index - 1)], x[static_cast<std::size_t>(index)]);
    append(std::move(x));
  }

  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); the Delta^{-1} is moved to
  // the front, conjugating everything already accumulated.
  void multiply_negative(int index) {
    for (auto& f : factors_) f = flip(f);
    Perm x = delta_;
    std::swap(x[static_cast<std::size_t>(index - 1)], x[static_cast<std::size_t>(index)]);
    --shift_;
    append(std::move(x));
  }

  CanonicalForm finish() const {
    CanonicalForm form;
    form.strands = n_;
    std::size_t first = 0;
    while (first < factors_.size() && factors_[first] == delta_) ++first;
    std::size_t last = factors_.size();
    const Perm id = identity_perm(n_);
    while (last > first && factors_[last - 1] == id) --last;
    form.infimum = shift_ + static_cast<std::int64_t>(first);
    form.factors.assign(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                        factors_.begin() + static_cast<std::ptrdiff_t>(last));
    return form;
  }

 private:
  void append(Perm x) {
    factors_.push_back(std::move(x));
    for (std::size_t k = factors_.size() - 1; k > 0; --k) {
      if (!left_weight(factors_[k - 1], factors_[k])) break;
    }
  }

  int n_;
  Perm delta_;
  std::int64_t shift_ = 0;
  std::vector<Perm> factors_;
};

// Reduced positive word of a permutation, peeling right descents.
std::vector<int> reduced_word(Perm p) {
  std::vector<int> word;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p[i - 1] > p[i]) {
        std::swap(p[i - 1], p[i]);
        word.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

std::string CanonicalForm::to_string() const {
  std::ostringstream out;
  out << "Delta^" << infimum;
  for (const auto& f : factors) {
    out << " [";
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f[k] + 1;
    out << ']';
  }
  return out.str();
}

CanonicalForm canonical_form(const BraidWord& w) {
  if (w.strands() <= 1) return CanonicalForm{w.strands(), 0, {}};
  NormalFormBuilder builder(w.strands());
  for (const auto& g : w.letters()) {
    if (g.positive) {
      builder.multiply_positive(g.index);
    } else {
      builder.multiply_negative(g.index);
    }
  }
  return builder.finish();
}

BraidWord canonical_representative(const CanonicalForm& form) {
  std::vector<Generator> letters;
  const int n = form.strands;
  if (n > 1) {
    const std::vector<int> delta_word = reduced_word(delta_perm(n));
    if (form.infimum >= 0) {
      for (std::int64_t k = 0; k < form.infimum; ++k) {
        for (int i : delta_word) letters.push_back(sigma(i));
      }
    } else {
      for (std::int64_t k = 0; k < -form.infimum; ++k) {
        for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) letters.push_back(sigma_inv(*it));
      }
    }
    for (const auto& f : form.factors) {
      for (int i : reduced_word(f)) letters.push_back(sigma(i));
    }
  }
  return BraidWord(n, std::move(letters));
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error("cannot compare braids on " + std::to_string(a.strands()) + " and " + std::to_string(b.strands()) +
                " strands");
  }
  if (a.exponent_sum() != b.exponent_sum()) return false;
  if (!(underlying_permutation(a) == underlying_permutation(b))) return false;
  if (a == b) return true;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace equivknot
