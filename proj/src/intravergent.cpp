#include "equivknot/intravergent.hpp"

#include <algorithm>
#include <sstream>

namespace equivknot {
namespace {

std::vector<Generator> copy_letters(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

IntravergentBraid rebuild(int strands, std::vector<Generator> letters) {
  return IntravergentBraid(BraidWord(strands, std::move(letters)));
}

void require_positive(const IntravergentBraid& b, const char* what) {
  if (!b.word().is_positive()) throw Error(std::string(what) + " requires a positive braid");
}

}  // namespace

bool validate_intravergent(const BraidWord& w) {
  const int s = w.strands();
  if (s % 2 == 0 || w.length() % 2 != 0) return false;
  const auto letters = w.letters();
  const std::size_t len = letters.size();
  for (std::size_t j = 0; j < len; ++j) {
    const Generator& g = letters[j];
    const Generator& h = letters[len - 1 - j];
    if (h.index != s - g.index || h.positive != g.positive) return false;
  }
  return true;
}

IntravergentBraid::IntravergentBraid(BraidWord word) : word_(std::move(word)) {
  if (!validate_intravergent(word_)) {
    throw Error("word '" + word_.to_string() + "' on " + std::to_string(word_.strands()) +
                " strands is not intravergent");
  }
}

int EquivariantMove::cost() const noexcept {
  switch (kind) {
    case MoveKind::TypeA:
      return 2;
    case MoveKind::TypeB:
      return 1;
    default:
      return 0;
  }
}

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::Commutation:
      return "commutation";
    case MoveKind::BraidRelation:
      return "braid_relation";
    case MoveKind::Destabilization:
      return "destabilization";
    case MoveKind::TypeA:
      return "type_a";
    case MoveKind::TypeB:
      return "type_b";
  }
  return "?";
}

std::string_view to_string(TypeBPattern pattern) noexcept {
  return pattern == TypeBPattern::Descending ? "descending" : "ascending";
}

std::string EquivariantMove::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == MoveKind::TypeB) out << '(' << to_string(pattern) << ')';
  out << " at";
  for (auto p : positions) out << ' ' << p;
  return out.str();
}

std::vector<std::size_t> commutation_sites(const IntravergentBraid& b, std::size_t pos) {
  const std::size_t other = b.length() - pos;  // mirror of the pair (pos, pos+1)
  if (other == pos) return {pos};
  return {std::min(pos, other), std::max(pos, other)};
}

std::vector<std::size_t> braid_relation_sites(const IntravergentBraid& b, std::size_t pos) {
  const std::size_t other = b.length() - 1 - pos;  // mirror of the triple pos..pos+2
  return {std::min(pos, other), std::max(pos, other)};
}

IntravergentBraid symmetric_commutation(const IntravergentBraid& b, std::size_t pos) {
  if (pos < 1 || pos >= b.length()) throw RewriteError("commutation site outside word", pos);
  BraidWord w = apply_commutation(b.word(), pos);
  const std::size_t other = b.length() - pos;
  if (other != pos) w = apply_commutation(w, other);
  return IntravergentBraid(std::move(w));
}

IntravergentBraid symmetric_braid_relation(const IntravergentBraid& b, std::size_t pos) {
  if (pos < 1 || pos + 2 > b.length()) throw RewriteError("braid relation site outside word", pos);
  const std::size_t other = b.length() - 1 - pos;
  const std::size_t gap = pos > other ? pos - other : other - pos;
  if (gap <= 2) throw RewriteError("braid relation site overlaps its mirror", pos);
  BraidWord w = apply_braid_relation(b.word(), pos);
  w = apply_braid_relation(w, other);
  return IntravergentBraid(std::move(w));
}

IntravergentBraid symmetric_destabilization(const IntravergentBraid& b) {
  require_positive(b, "destabilization");
  if (b.strands() < 3) throw Error("destabilization needs at least 3 strands");
  const int top = b.strands() - 1;
  if (b.word().count(1) != 1) {
    throw Error("destabilization needs exactly one sigma_1, found " + std::to_string(b.word().count(1)));
  }
  std::vector<Generator> kept;
  for (const auto& g : b.word().letters()) {
    if (g.index == 1 || g.index == top) continue;
    kept.push_back({g.index - 1, g.positive});
  }
  return rebuild(b.strands() - 2, std::move(kept));
}

std::pair<IntravergentBraid, EquivariantMove> type_A_move(const IntravergentBraid& b, std::size_t pos) {
  require_positive(b, "type A move");
  if (pos < 1 || pos >= b.length()) throw RewriteError("type A site outside word", pos);
  const Generator& g = b.at(pos);
  if (!(g == b.at(pos + 1))) throw RewriteError("type A move needs a square sigma_i sigma_i", pos);
  const std::size_t other = b.length() - pos;
  // A square can never be its own mirror on an odd number of strands.
  if (other <= pos + 1 && pos <= other + 1) throw std::logic_error("type A square overlaps its mirror");
  std::vector<Generator> letters;
  letters.reserve(b.length() - 4);
  const auto all = b.word().letters();
  for (std::size_t k = 1; k <= all.size(); ++k) {
    if (k == pos || k == pos + 1 || k == other || k == other + 1) continue;
    letters.push_back(all[k - 1]);
  }
  EquivariantMove move{MoveKind::TypeA, {std::min(pos, other), std::max(pos, other)}, TypeBPattern::Descending};
  return {rebuild(b.strands(), std::move(letters)), move};
}

std::pair<IntravergentBraid, EquivariantMove> type_B_move(const IntravergentBraid& b) {
  require_positive(b, "type B move");
  if (b.length() < 4) throw RewriteError("type B move needs at least four letters", 1);
  const std::size_t m = b.half_length();
  const int n = b.half_strands();
  const std::vector<int> middle{b.at(m - 1).index, b.at(m).index, b.at(m + 1).index, b.at(m + 2).index};
  TypeBPattern pattern;
  std::pair<int, int> replacement;
  if (middle == std::vector<int>{n + 1, n, n + 1, n}) {
    pattern = TypeBPattern::Descending;
    replacement = {n, n + 1};
  } else if (middle == std::vector<int>{n, n + 1, n, n + 1}) {
    pattern = TypeBPattern::Ascending;
    replacement = {n + 1, n};
  } else {
    throw RewriteError("middle four letters do not match a type B pattern", m - 1);
  }
  std::vector<Generator> letters = copy_letters(b.word());
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(m - 2), letters.begin() + static_cast<std::ptrdiff_t>(m + 2));
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(m - 2), {sigma(replacement.first), sigma(replacement.second)});
  return {rebuild(b.strands(), std::move(letters)), EquivariantMove{MoveKind::TypeB, {m - 1}, pattern}};
}

IntravergentBraid apply_move(const IntravergentBraid& b, const EquivariantMove& move) {
  if (move.positions.empty() && move.kind != MoveKind::Destabilization) {
    throw Error("move " + std::string(to_string(move.kind)) + " has no positions");
  }
  auto check_sites = [&](const std::vector<std::size_t>& expected) {
    if (expected != move.positions) throw RewriteError("recorded sites do not match the mirror pair", move.positions.front());
  };
  switch (move.kind) {
    case MoveKind::Commutation:
      check_sites(commutation_sites(b, move.positions.front()));
      return symmetric_commutation(b, move.positions.front());
    case MoveKind::BraidRelation:
      check_sites(braid_relation_sites(b, move.positions.front()));
      return symmetric_braid_relation(b, move.positions.front());
    case MoveKind::Destabilization: {
      std::vector<std::size_t> expected;
      const int top = b.strands() - 1;
      for (std::size_t k = 1; k <= b.length(); ++k) {
        if (b.at(k).index == 1 || b.at(k).index == top) expected.push_back(k);
      }
      if (expected != move.positions) throw Error("recorded destabilization sites do not match the word");
      return symmetric_destabilization(b);
    }
    case MoveKind::TypeA: {
      auto [next, performed] = type_A_move(b, move.positions.front());
      if (performed.positions != move.positions) {
        throw RewriteError("recorded type A sites are not a mirror pair", move.positions.front());
      }
      return next;
    }
    case MoveKind::TypeB: {
      auto [next, performed] = type_B_move(b);
      if (performed.positions != move.positions || performed.pattern != move.pattern) {
        throw RewriteError("recorded type B site or pattern does not match", move.positions.front());
      }
      return next;
    }
  }
  throw Error("unknown move kind");
}

}  // namespace equivknot
