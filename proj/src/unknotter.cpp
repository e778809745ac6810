#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "equivknot/unknotter.hpp"

namespace equivknot {

int MoveLog::computed_cost() const noexcept {
  int cost = 0;
  for (const auto& step : steps) cost += step.cost();
  return cost;
}

std::size_t MoveLog::count(MoveKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [kind](const EquivariantMove& m) { return m.kind == kind; }));
}

int default_search_depth() {
  if (const char* env = std::getenv("SI_UNKNOT_SEARCH_DEPTH")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0 && value <= 64) return static_cast<int>(value);
  }
  return 16;
}

namespace {

// Lexicographic progress measure. Isotopy-only macro steps keep (strands,
// length) and must decrease the remaining entries: number of sigma_1 letters,
// whether the two sigma_1 under consideration straddle the middle, then the
// distances that the rewriting shrinks.
using Measure = std::tuple<int, std::size_t, std::size_t, int, std::size_t, std::size_t>;

std::vector<std::size_t> sigma_one_positions(const IntravergentBraid& b) {
  std::vector<std::size_t> positions;
  for (std::size_t k = 1; k <= b.length(); ++k) {
    if (b.at(k).index == 1) positions.push_back(k);
  }
  return positions;
}

// First pair of consecutive sigma_1 letters lying in the same half.
std::optional<std::pair<std::size_t, std::size_t>> same_half_pair(const IntravergentBraid& b,
                                                                  const std::vector<std::size_t>& ones) {
  const std::size_t m = b.half_length();
  for (std::size_t k = 0; k + 1 < ones.size(); ++k) {
    if ((ones[k] <= m) == (ones[k + 1] <= m)) return std::pair{ones[k], ones[k + 1]};
  }
  return std::nullopt;
}

Measure measure_of(const IntravergentBraid& b) {
  const auto ones = sigma_one_positions(b);
  Measure base{b.strands(), b.length(), ones.size(), 0, 0, 0};
  if (ones.size() < 2) return base;
  if (auto pair = same_half_pair(b, ones)) {
    std::get<4>(base) = pair->second - pair->first;
    return base;
  }
  const std::size_t m = b.half_length();
  std::get<3>(base) = 1;
  std::get<4>(base) = m - ones[0];
  std::get<5>(base) = ones[1] - m;
  return base;
}

std::optional<std::size_t> leftmost_square(const IntravergentBraid& b) {
  for (std::size_t p = 1; p < b.length(); ++p) {
    if (b.at(p) == b.at(p + 1)) return p;
  }
  return std::nullopt;
}

bool has_type_b_pattern(const IntravergentBraid& b) {
  if (b.length() < 4) return false;
  const std::size_t m = b.half_length();
  const int n = b.half_strands();
  const int a = b.at(m - 1).index, c = b.at(m).index, d = b.at(m + 1).index, e = b.at(m + 2).index;
  return (a == n + 1 && c == n && d == n + 1 && e == n) || (a == n && c == n + 1 && d == n && e == n + 1);
}

BraidWord subword(const IntravergentBraid& b, std::size_t first, std::size_t last) {
  std::vector<Generator> letters(b.word().letters().begin() + static_cast<std::ptrdiff_t>(first - 1),
                                 b.word().letters().begin() + static_cast<std::ptrdiff_t>(last));
  return BraidWord(b.strands(), std::move(letters));
}

class Unknotter {
 public:
  Unknotter(const IntravergentBraid& initial, int search_depth, UnknotStats* stats)
      : state_(initial), search_depth_(search_depth), stats_(stats) {}

  std::vector<EquivariantMove> run() {
    while (state_.strands() > 1) {
      const Measure before = measure_of(state_);
      const IntravergentBraid checkpoint = state_;
      const std::size_t logged = steps_.size();
      bool fall_back = false;
      try {
        macro_step();
      } catch (const RewriteError&) {
        fall_back = true;
      }
      if (!fall_back && !(measure_of(state_) < before)) {
        // The mirror of a braid relation on sigma_{2n-1} sigma_{2n} sigma_{2n-1}
        // is sigma_2 sigma_1 sigma_2 -> sigma_1 sigma_2 sigma_1, which adds a
        // sigma_1 on the other side. When that leaves a square, remove it;
        // otherwise undo the step and search.
        if (leftmost_square(state_)) {
          type_a_leftmost();
        } else {
          fall_back = true;
        }
      }
      if (fall_back) {
        state_ = checkpoint;
        steps_.resize(logged);
        fallback(before);
      }
      if (stats_) ++stats_->macro_steps;
      if (!(measure_of(state_) < before)) fail("progress measure did not decrease");
    }
    if (state_.length() != 0) fail("one strand left but the word is not empty");
    return std::move(steps_);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream out;
    out << "unknotter internal error: " << why << "; state: strands=" << state_.strands() << " word='"
        << state_.word().to_string() << "' after " << steps_.size() << " steps";
    throw UnknotterInternalError(out.str());
  }

  // -- primitive symmetric steps, each logged ---------------------------------
  void commute(std::size_t p) {
    auto sites = commutation_sites(state_, p);
    state_ = symmetric_commutation(state_, p);
    steps_.push_back({MoveKind::Commutation, std::move(sites), TypeBPattern::Descending});
  }

  void relate(std::size_t p) {
    auto sites = braid_relation_sites(state_, p);
    state_ = symmetric_braid_relation(state_, p);
    steps_.push_back({MoveKind::BraidRelation, std::move(sites), TypeBPattern::Descending});
  }

  void type_a(std::size_t p) {
    auto [next, move] = type_A_move(state_, p);
    state_ = std::move(next);
    steps_.push_back(std::move(move));
  }

  void type_a_leftmost() {
    const auto p = leftmost_square(state_);
    if (!p) fail("expected a square generator");
    type_a(*p);
  }

  void type_b() {
    auto [next, move] = type_B_move(state_);
    state_ = std::move(next);
    steps_.push_back(std::move(move));
  }

  void destabilize() {
    std::vector<std::size_t> sites;
    const int top = state_.strands() - 1;
    for (std::size_t k = 1; k <= state_.length(); ++k) {
      if (state_.at(k).index == 1 || state_.at(k).index == top) sites.push_back(k);
    }
    state_ = symmetric_destabilization(state_);
    steps_.push_back({MoveKind::Destabilization, std::move(sites), TypeBPattern::Descending});
  }

  void apply_local(const std::vector<LocalRewrite>& steps, std::size_t offset) {
    for (const auto& step : steps) {
      const std::size_t p = offset + step.position - 1;
      if (step.kind == MoveKind::Commutation) {
        commute(p);
      } else {
        relate(p);
      }
    }
  }

  // Reorders the symmetric block first..(length+1-first) so that the token
  // that started at block offset target[k] ends at offset k. Only commuting
  // letters are ever swapped; the target must be mirror symmetric.
  void symmetric_reorder(std::size_t first, const std::vector<std::size_t>& target) {
    const std::size_t len = target.size();
    const std::size_t m = state_.half_length();
    std::vector<std::size_t> rank(len);
    for (std::size_t k = 0; k < len; ++k) rank[target[k]] = k;
    std::vector<std::size_t> tokens(len);
    std::iota(tokens.begin(), tokens.end(), 0);
    for (;;) {
      std::optional<std::size_t> site;
      for (std::size_t p = first; p <= m && p - first + 1 < len; ++p) {
        if (rank[tokens[p - first]] > rank[tokens[p - first + 1]]) {
          site = p;
          break;
        }
      }
      if (!site) return;
      const auto sites = commutation_sites(state_, *site);
      commute(*site);
      for (auto s : sites) std::swap(tokens[s - first], tokens[s - first + 1]);
    }
  }

  // -- case analysis ------------------------------------------------------------
  void macro_step() {
    const auto ones = sigma_one_positions(state_);
    if (ones.empty()) fail("no sigma_1 on more than one strand: closure is not a knot");
    if (ones.size() == 1) {
      destabilize();
      return;
    }
    // A square never sits across the middle, so it can always be removed
    // together with its mirror image.
    if (leftmost_square(state_)) {
      type_a_leftmost();
      return;
    }
    if (auto pair = same_half_pair(state_, ones)) {
      same_half(pair->first, pair->second);
    } else {
      straddling(ones[0], ones[1]);
    }
  }

  // Two consecutive sigma_1 at a < b in the same half.
  void same_half(std::size_t a, std::size_t b) {
    const auto plan = sigma_low_rewrite(subword(state_, a, b - 1), Orientation::Left);
    switch (plan.kind) {
      case SigmaLowKind::Staircase: {
        if (b - a == 1) {  // sigma_1 sigma_1
          type_a(a);
          return;
        }
        // staircase followed by sigma_1: bring the sigma_1 next to sigma_1 sigma_2
        // and apply the braid relation, leaving one sigma_1 fewer.
        for (std::size_t p = b - 1; p >= a + 2; --p) commute(p);
        relate(a);
        return;
      }
      case SigmaLowKind::ContainsSquare:
        type_a_leftmost();
        return;
      case SigmaLowKind::DisplacedSigmaOne:
        apply_local(plan.steps, a);
        return;
    }
  }

  // One sigma_1 at a <= m, the other at b > m.
  void straddling(std::size_t a, std::size_t b) {
    const std::size_t m = state_.half_length();
    const auto n = static_cast<std::size_t>(state_.half_strands());
    const auto plan = sigma_low_rewrite(subword(state_, a, m), Orientation::Left);
    if (plan.kind == SigmaLowKind::ContainsSquare) {
      type_a_leftmost();
      return;
    }
    if (plan.kind == SigmaLowKind::DisplacedSigmaOne) {
      apply_local(plan.steps, a);
      return;
    }
    // The first half ends with the staircase sigma_1 ... sigma_i; by symmetry
    // the second half starts with sigma_{2n+1-i} ... sigma_{2n}.
    const std::size_t i = m - a + 1;
    if (i < n) {
      // The two staircases commute: swap them around the middle.
      std::vector<std::size_t> target(2 * i);
      for (std::size_t k = 0; k < i; ++k) {
        target[k] = i + k;
        target[i + k] = k;
      }
      symmetric_reorder(m - i + 1, target);
      return;
    }
    if (i == n) {
      staircase_at_middle(b);
      return;
    }
    if (i == n + 1) {
      type_b();  // middle is sigma_n sigma_{n+1} sigma_n sigma_{n+1}
      return;
    }
    // i > n + 1: the middle pair sigma_i sigma_{2n+1-i} commutes; afterwards the
    // first half ends sigma_1 ... sigma_{i-1} sigma_{2n+1-i}.
    commute(m);
    if (state_.at(m).index == 1) return;  // i = 2n: both sigma_1 now in the first half
    const auto shorten = sigma_low_rewrite(subword(state_, a, m), Orientation::Left);
    if (shorten.kind != SigmaLowKind::DisplacedSigmaOne) throw RewriteError("expected a displaced sigma_1", a);
    apply_local(shorten.steps, a);
  }

  // First half ends with sigma_1 ... sigma_n, second half starts with
  // sigma_{n+1} ... sigma_{2n}; the second sigma_1 sits at b.
  void staircase_at_middle(std::size_t b) {
    const std::size_t m = state_.half_length();
    const auto n = static_cast<std::size_t>(state_.half_strands());
    const std::size_t start = m + n + 1;
    const auto plan = sigma_low_rewrite(subword(state_, start, b), Orientation::Right);
    if (plan.kind == SigmaLowKind::ContainsSquare) {
      type_a_leftmost();
      return;
    }
    if (plan.kind == SigmaLowKind::DisplacedSigmaOne) {
      apply_local(plan.steps, start);
      return;
    }
    const auto j = static_cast<std::size_t>(plan.index);  // w_rhs = sigma_j ... sigma_1
    if (j < n) {
      // Blocks around the middle: mirror(w_rhs) | lower staircase || upper
      // staircase | w_rhs. Reorder to lower | w_rhs || mirror(w_rhs) | upper, which
      // puts both sigma_1 in the first half.
      std::vector<std::size_t> target;
      for (std::size_t k = 0; k < n; ++k) target.push_back(j + k);
      for (std::size_t k = 0; k < j; ++k) target.push_back(j + 2 * n + k);
      for (std::size_t k = 0; k < j; ++k) target.push_back(k);
      for (std::size_t k = 0; k < n; ++k) target.push_back(j + n + k);
      symmetric_reorder(m - n - j + 1, target);
      return;
    }
    if (j == n) {
      // Move the leading sigma_n of w_rhs next to sigma_{n+1} (and symmetrically),
      // leaving sigma_{n+1} sigma_n sigma_{n+1} sigma_n in the middle.
      for (std::size_t p = m + n; p >= m + 2; --p) commute(p);
      type_b();
      return;
    }
    if (j == 2 * n) {  // sigma_{2n} sigma_{2n} across the end of the upper staircase
      type_a_leftmost();
      return;
    }
    // n < j < 2n: lower j by one.
    for (std::size_t p = m + n; p >= m + j + 2 - n; --p) commute(p);
    relate(m + j - n);
    for (std::size_t p = m + j - n - 1; p >= m + 1; --p) commute(p);
    commute(m);
    if (state_.at(m + 1).index == 1) return;  // 2n - j = 1: both sigma_1 now in the second half
    for (std::size_t p = m + 1; p <= m + n; ++p) commute(p);
    const auto shorten = sigma_low_rewrite(subword(state_, start, start + j - 1), Orientation::Right);
    if (shorten.kind != SigmaLowKind::DisplacedSigmaOne) throw RewriteError("expected a displaced sigma_1", start);
    apply_local(shorten.steps, start);
  }

  // -- fallback ---------------------------------------------------------------------
  bool goal_reached(const IntravergentBraid& b, const Measure& before) const {
    return measure_of(b) < before || leftmost_square(b).has_value() || has_type_b_pattern(b);
  }

  void fallback(const Measure& before) {
    if (stats_) ++stats_->fallback_searches;
    struct Node {
      IntravergentBraid braid;
      std::size_t parent;
      EquivariantMove move;
      int depth;
    };
    std::deque<Node> nodes;
    std::unordered_map<std::string, bool> seen;
    nodes.push_back({state_, 0, {}, 0});
    seen[state_.word().to_string()] = true;
    constexpr std::size_t kNodeCap = 200000;
    const std::size_t m = state_.half_length();
    for (std::size_t head = 0; head < nodes.size() && nodes.size() < kNodeCap; ++head) {
      if (head > 0 && goal_reached(nodes[head].braid, before)) {
        std::vector<EquivariantMove> path;
        for (std::size_t k = head; k != 0; k = nodes[k].parent) path.push_back(nodes[k].move);
        std::reverse(path.begin(), path.end());
        for (const auto& move : path) {
          if (move.kind == MoveKind::Commutation) {
            commute(move.positions.front());
          } else {
            relate(move.positions.front());
          }
        }
        if (!(measure_of(state_) < before)) {
          if (leftmost_square(state_)) {
            type_a_leftmost();
          } else {
            type_b();
          }
        }
        return;
      }
      if (nodes[head].depth >= search_depth_) continue;
      const IntravergentBraid current = nodes[head].braid;
      const int depth = nodes[head].depth;
      auto expand = [&](MoveKind kind, std::size_t p) {
        try {
          IntravergentBraid next = kind == MoveKind::Commutation ? symmetric_commutation(current, p)
                                                                 : symmetric_braid_relation(current, p);
          auto key = next.word().to_string();
          if (seen.emplace(std::move(key), true).second) {
            auto sites = kind == MoveKind::Commutation ? commutation_sites(current, p) : braid_relation_sites(current, p);
            nodes.push_back({std::move(next), head, {kind, std::move(sites), TypeBPattern::Descending}, depth + 1});
          }
        } catch (const RewriteError&) {
        }
      };
      for (std::size_t p = 1; p <= m; ++p) expand(MoveKind::Commutation, p);
      for (std::size_t p = 1; p + 2 <= m; ++p) expand(MoveKind::BraidRelation, p);
    }
    fail("no rewriting case applied and the bounded isotopy search found nothing");
  }

  IntravergentBraid state_;
  int search_depth_;
  UnknotStats* stats_;
  std::vector<EquivariantMove> steps_;
};

}  // namespace

MoveLog equivariant_unknot(const IntravergentBraid& b, const UnknotOptions& options, UnknotStats* stats) {
  if (!b.word().is_positive()) throw Error("equivariant unknotting needs a positive braid");
  if (closure_components(b.word()) != 1) {
    throw Error("closure has " + std::to_string(closure_components(b.word())) + " components, not a knot");
  }
  Unknotter unknotter(b, options.search_depth.value_or(default_search_depth()), stats);
  MoveLog log{b, unknotter.run(), 0};
  log.total_cost = log.computed_cost();
  return log;
}

}  // namespace equivknot
