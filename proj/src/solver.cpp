#include "cpgame/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "cpgame/errors.hpp"
#include "cpgame/evaluate.hpp"

namespace cpgame {

namespace {

// Flattened profile digits: one action index per (player, observation) pair,
// players in index order, observations in declared order.  Ascending
// odometer order over the digits is lexicographic order over profiles.
struct ProfileSpace {
  explicit ProfileSpace(const Game& game) : game_(&game) {
    const int n = game.player_count();
    offsets.resize(n);
    std::size_t total = 0;
    for (int i = 0; i < n; ++i) {
      offsets[i] = total;
      total += game.observations(i).size();
    }
    digit_count = total;
    radix.resize(total);
    digit_player.resize(total);
    for (int i = 0; i < n; ++i) {
      for (std::size_t o = 0; o < game.observations(i).size(); ++o) {
        radix[offsets[i] + o] = static_cast<int>(game.actions(i).size());
        digit_player[offsets[i] + o] = i;
      }
    }
  }

  JointStrategy to_joint_strategy(const std::vector<int>& digits) const {
    JointStrategy js;
    const int n = game_->player_count();
    js.per_player.reserve(n);
    for (int i = 0; i < n; ++i) {
      const std::size_t count = game_->observations(i).size();
      Strategy s{i, std::vector<int>(digits.begin() + offsets[i],
                                     digits.begin() + offsets[i] + count)};
      js.per_player.push_back(std::move(s));
    }
    return js;
  }

  const Game* game_;
  std::size_t digit_count = 0;
  std::vector<std::size_t> offsets;  // per player
  std::vector<int> radix;            // per digit
  std::vector<int> digit_player;     // per digit
};

// Per-world data laid out for the evaluation inner loop.  Worlds with zero
// probability contribute nothing and are dropped.
struct EvalTables {
  EvalTables(const Game& game, const ProfileSpace& space) {
    const int n = game.player_count();
    action_strides.assign(n, 1);
    std::size_t stride = 1;
    for (int i = n - 1; i >= 0; --i) {
      action_strides[i] = stride;
      stride *= game.actions(i).size();
    }
    for (std::size_t w = 0; w < game.worlds().size(); ++w) {
      const World& world = game.worlds()[w];
      if (world.probability.is_zero()) continue;
      probabilities.push_back(world.probability);
      payoffs.push_back(&world.payoffs);
      std::vector<std::size_t> positions(n);
      for (int i = 0; i < n; ++i) {
        positions[i] = space.offsets[i] + static_cast<std::size_t>(game.world_observation(w, i));
      }
      digit_positions.push_back(std::move(positions));
    }
  }

  Rational value(const std::vector<int>& digits) const {
    Rational total;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
      std::size_t index = 0;
      const auto& positions = digit_positions[k];
      for (std::size_t i = 0; i < positions.size(); ++i) {
        index += static_cast<std::size_t>(digits[positions[i]]) * action_strides[i];
      }
      const Rational& pay = (*payoffs[k])[index][0];
      if (!pay.is_zero()) total += probabilities[k] * pay;
    }
    return total;
  }

  std::vector<Rational> probabilities;
  std::vector<const std::vector<std::vector<Rational>>*> payoffs;
  std::vector<std::vector<std::size_t>> digit_positions;  // [world][player]
  std::vector<std::size_t> action_strides;                // per player
};

void require_solvable(const Game& game, const char* op) {
  game.require_evaluable();
  if (!game.common_payoff()) {
    throw ValidationError(std::string(op) + " requires a common-payoff game");
  }
  if (game.profile_count().is_zero()) {
    throw ValidationError(std::string(op) + " requires at least one pure joint strategy");
  }
}

std::vector<std::string> dimension_strings(const Game& game) {
  std::vector<std::string> dims;
  for (int i = 0; i < game.player_count(); ++i) {
    dims.push_back(game.strategy_count(i).str());
  }
  return dims;
}

bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int d = static_cast<int>(digits.size()) - 1; d >= 0; --d) {
    if (++digits[d] < radix[d]) return true;
    digits[d] = 0;
  }
  return false;
}

// Branch-and-bound engine shared by branch_and_bound_optimal and
// util_decide.  Maintains, per positive-probability world, the best payoff
// among joint actions consistent with the decided digits, times the world's
// probability; the running total over worlds is the admissible upper bound.
class BranchAndBound {
public:
  BranchAndBound(const Game& game, const ProfileSpace& space)
      : game_(game), space_(space), tables_(game, space) {
    digits_.assign(space_.digit_count, -1);
    worlds_by_digit_.resize(space_.digit_count);
    const std::size_t world_count = tables_.probabilities.size();
    for (std::size_t k = 0; k < world_count; ++k) {
      for (std::size_t pos : tables_.digit_positions[k]) {
        worlds_by_digit_[pos].push_back(k);
      }
    }
    contributions_.resize(world_count);
    for (std::size_t k = 0; k < world_count; ++k) {
      contributions_[k] = world_bound(k);
      bound_ += contributions_[k];
    }
  }

  // Runs the search to completion (or until the incumbent reaches `stop_at`,
  // when provided).  The incumbent starts from the all-first-actions profile.
  void run(const std::optional<Rational>& stop_at) {
    std::vector<int> first(space_.digit_count, 0);
    incumbent_value_ = tables_.value(first);
    incumbent_digits_ = first;
    ++profiles_examined_;
    stop_at_ = stop_at;
    if (done() || space_.digit_count == 0) return;
    descend(0);
  }

  const Rational& incumbent_value() const { return incumbent_value_; }
  JointStrategy incumbent_strategy() const { return space_.to_joint_strategy(incumbent_digits_); }
  std::uint64_t profiles_examined() const { return profiles_examined_; }
  std::uint64_t nodes_pruned() const { return nodes_pruned_; }

private:
  bool done() const { return stop_at_ && incumbent_value_ >= *stop_at_; }

  // Best payoff of world k over joint actions consistent with the decided
  // digits, weighted by the world's probability.
  Rational world_bound(std::size_t k) const {
    const auto& positions = tables_.digit_positions[k];
    const int n = static_cast<int>(positions.size());
    std::vector<int> actions(n, 0);
    for (int i = 0; i < n; ++i) {
      const int decided = digits_[positions[i]];
      actions[i] = decided < 0 ? 0 : decided;
    }
    const Rational* best = nullptr;
    while (true) {
      std::size_t index = 0;
      for (int i = 0; i < n; ++i) {
        index += static_cast<std::size_t>(actions[i]) * tables_.action_strides[i];
      }
      const Rational& pay = (*tables_.payoffs[k])[index][0];
      if (best == nullptr || pay > *best) best = &pay;
      int i = n - 1;
      for (; i >= 0; --i) {
        if (digits_[positions[i]] >= 0) continue;  // decided players stay fixed
        if (++actions[i] < static_cast<int>(game_.actions(i).size())) break;
        actions[i] = 0;
      }
      if (i < 0) break;
    }
    return tables_.probabilities[k] * (*best);
  }

  void assign(std::size_t digit, int action, std::vector<std::pair<std::size_t, Rational>>& undo) {
    digits_[digit] = action;
    for (std::size_t k : worlds_by_digit_[digit]) {
      Rational updated = world_bound(k);
      if (updated != contributions_[k]) {
        undo.emplace_back(k, contributions_[k]);
        bound_ -= contributions_[k];
        bound_ += updated;
        contributions_[k] = std::move(updated);
      }
    }
  }

  void unassign(std::size_t digit, const std::vector<std::pair<std::size_t, Rational>>& undo) {
    digits_[digit] = -1;
    for (const auto& [k, previous] : undo) {
      bound_ -= contributions_[k];
      bound_ += previous;
      contributions_[k] = previous;
    }
  }

  void descend(std::size_t depth) {
    if (depth == space_.digit_count) {
      // All digits decided: the bound is the exact profile value.
      ++profiles_examined_;
      if (bound_ > incumbent_value_) {
        incumbent_value_ = bound_;
        incumbent_digits_ = digits_;
      }
      return;
    }
    std::vector<std::pair<std::size_t, Rational>> undo;
    for (int action = 0; action < space_.radix[depth]; ++action) {
      undo.clear();
      assign(depth, action, undo);
      if (bound_ <= incumbent_value_) {
        ++nodes_pruned_;
      } else {
        descend(depth + 1);
      }
      unassign(depth, undo);
      if (done()) return;
    }
  }

  const Game& game_;
  const ProfileSpace& space_;
  EvalTables tables_;

  std::vector<int> digits_;                           // -1 = undecided
  std::vector<std::vector<std::size_t>> worlds_by_digit_;
  std::vector<Rational> contributions_;
  Rational bound_;

  Rational incumbent_value_;
  std::vector<int> incumbent_digits_;
  std::optional<Rational> stop_at_;
  std::uint64_t profiles_examined_ = 0;
  std::uint64_t nodes_pruned_ = 0;
};

}  // namespace

const Rational& NormalForm::max_entry() const {
  if (payoffs.empty()) throw ValidationError("normal form has no entries");
  return *std::max_element(payoffs.begin(), payoffs.end());
}

SolveResult brute_force_optimal(const Game& game, const SolveOptions& options) {
  require_solvable(game, "brute_force_optimal");
  const Integer count = game.profile_count();
  if (count > options.profile_cap) {
    throw SizeCapError("profile count " + count.str() + " exceeds cap " +
                           std::to_string(options.profile_cap) +
                           "; use branch and bound",
                       dimension_strings(game), count.str());
  }

  const ProfileSpace space(game);
  const EvalTables tables(game, space);

  SolveResult result;
  std::vector<int> digits(space.digit_count, 0);
  std::vector<int> best_digits = digits;
  Rational best = tables.value(digits);
  ++result.profiles_examined;
  while (advance(digits, space.radix)) {
    Rational value = tables.value(digits);
    ++result.profiles_examined;
    if (value > best) {
      best = std::move(value);
      best_digits = digits;
    }
  }
  result.optimal_value = std::move(best);
  result.witness = space.to_joint_strategy(best_digits);
  return result;
}

SolveResult branch_and_bound_optimal(const Game& game, const SolveOptions&) {
  require_solvable(game, "branch_and_bound_optimal");
  const ProfileSpace space(game);
  BranchAndBound engine(game, space);
  engine.run(std::nullopt);

  SolveResult result;
  result.optimal_value = engine.incumbent_value();
  result.witness = engine.incumbent_strategy();
  result.profiles_examined = engine.profiles_examined();
  result.nodes_pruned = engine.nodes_pruned();
  return result;
}

UtilDecision util_decide(const Game& game, const Rational& threshold, const SolveOptions&) {
  require_solvable(game, "util_decide");
  const ProfileSpace space(game);
  BranchAndBound engine(game, space);
  engine.run(threshold);

  UtilDecision decision;
  decision.profiles_examined = engine.profiles_examined();
  decision.nodes_pruned = engine.nodes_pruned();
  decision.satisfied = engine.incumbent_value() >= threshold;
  if (decision.satisfied) {
    decision.witness = engine.incumbent_strategy();
    decision.witness_value = engine.incumbent_value();
  }
  return decision;
}

SolveResult perfect_info_solve(const Game& game) {
  require_solvable(game, "perfect_info_solve");
  const int n = game.player_count();

  // Perfect information: among positive-probability worlds, each observation
  // pins down the world for every player.
  for (int i = 0; i < n; ++i) {
    std::vector<int> seen(game.observations(i).size(), -1);
    for (std::size_t w = 0; w < game.worlds().size(); ++w) {
      if (game.worlds()[w].probability.is_zero()) continue;
      const int obs = game.world_observation(w, i);
      if (seen[obs] >= 0) {
        throw PreconditionError("player " + std::to_string(i + 1) + " observes \"" +
                                game.observations(i)[obs] + "\" in both world \"" +
                                game.worlds()[seen[obs]].id + "\" and world \"" +
                                game.worlds()[w].id + "\"");
      }
      seen[obs] = static_cast<int>(w);
    }
  }

  SolveResult result;
  JointStrategy js;
  js.per_player.reserve(n);
  for (int i = 0; i < n; ++i) {
    js.per_player.push_back(Strategy{i, std::vector<int>(game.observations(i).size(), 0)});
  }

  for (std::size_t w = 0; w < game.worlds().size(); ++w) {
    const World& world = game.worlds()[w];
    if (world.probability.is_zero()) continue;
    std::size_t best_index = 0;
    for (std::size_t a = 1; a < world.payoffs.size(); ++a) {
      if (world.payoffs[a][0] > world.payoffs[best_index][0]) best_index = a;
    }
    const std::vector<int> tuple = game.joint_tuple(best_index);
    for (int i = 0; i < n; ++i) {
      js.per_player[i].choice[game.world_observation(w, i)] = tuple[i];
    }
    result.optimal_value += world.probability * world.payoffs[best_index][0];
  }
  result.witness = std::move(js);
  return result;
}

NormalForm to_normal_form(const Game& game, const NormalFormOptions& options) {
  require_solvable(game, "to_normal_form");
  const Integer count = game.profile_count();
  if (count > options.entry_cap) {
    throw SizeCapError("normal form would hold " + count.str() + " entries, over the cap of " +
                           std::to_string(options.entry_cap),
                       dimension_strings(game), count.str());
  }

  const ProfileSpace space(game);
  const EvalTables tables(game, space);

  NormalForm nf;
  nf.strategy_counts.reserve(game.player_count());
  for (int i = 0; i < game.player_count(); ++i) {
    nf.strategy_counts.push_back(game.strategy_count(i).convert_to<std::uint64_t>());
  }
  nf.payoffs.reserve(count.convert_to<std::size_t>());
  std::vector<int> digits(space.digit_count, 0);
  do {
    nf.payoffs.push_back(tables.value(digits));
  } while (advance(digits, space.radix));
  return nf;
}

}  // namespace cpgame
