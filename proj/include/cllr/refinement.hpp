#ifndef CLLR_REFINEMENT_HPP
#define CLLR_REFINEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cllr/semantics.hpp"
#include "cllr/term.hpp"

namespace cllr {

struct SimRelation {
  std::set<std::pair<StateId, StateId>> pairs;
  bool contains(StateId p, StateId q) const { return pairs.count({p, q}) != 0; }
};

enum class Reason { ReadySetMismatch, ConsistencyViolation, NoMatchingMove, NoStableDescendantMatch };

inline const char *to_string(Reason r) {
  switch (r) {
  case Reason::ReadySetMismatch:
    return "ready-set-mismatch";
  case Reason::ConsistencyViolation:
    return "consistency-violation";
  case Reason::NoMatchingMove:
    return "no-matching-move";
  case Reason::NoStableDescendantMatch:
    return "no-stable-descendant-match";
  }
  return "unknown";
}

struct PathStep {
  Action action; // tau for the internal part of the path
  StateId state;
};

/// Moves of the refining process leading to an obligation the other side
/// cannot meet. `against` is the last state of the other side it was
/// compared with, when there was one.
struct Counterexample {
  std::vector<PathStep> path;
  Reason reason = Reason::NoMatchingMove;
  std::optional<StateId> against;
};

struct RefinementVerdict {
  bool holds = false;
  std::optional<SimRelation> witness;
  std::optional<Counterexample> counterexample;
  std::shared_ptr<const Lts> lts;
  StateId left = 0;
  StateId right = 0;
};

/// Weak visible moves between stable states, materialised once per graph.
class WeakMoves {
public:
  explicit WeakMoves(const Lts &lts) : lts_(&lts), alphabet_(lts.alphabet()) {}

  const std::set<std::string> &alphabet() const { return alphabet_; }

  const std::vector<StateId> &of(StateId s, const std::string &a) {
    auto key = std::make_pair(s, a);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, weak_visible_step(*lts_, s, a)).first;
    return it->second;
  }

  const std::vector<StateId> &descendants(StateId s) {
    auto it = desc_.find(s);
    if (it == desc_.end())
      it = desc_.emplace(s, stable_consistent_descendants(*lts_, s)).first;
    return it->second;
  }

private:
  const Lts *lts_;
  std::set<std::string> alphabet_;
  std::map<std::pair<StateId, std::string>, std::vector<StateId>> cache_;
  std::map<StateId, std::vector<StateId>> desc_;
};

/// Greatest stable ready simulation on a finite graph, by iterated deletion
/// from the pairs that satisfy the local conditions. Deletions are applied
/// in rounds against a snapshot, and each deleted pair remembers the move
/// that killed it so counterexamples can be replayed.
class StableSimulation {
public:
  enum class Why { NotStable, Consistency, ReadySet, Move };
  struct Failure {
    Why why = Why::NotStable;
    std::size_t round = 0;
    std::string action;
    StateId target = 0;
  };

  explicit StableSimulation(const Lts &lts) : lts_(&lts), moves_(lts) {
    for (StateId s = 0; s < lts.size(); ++s)
      if (lts.stable(s)) {
        slot_.emplace(s, stable_.size());
        stable_.push_back(s);
      }
    const std::size_t k = stable_.size();
    rel_.assign(k * k, 0);
    fail_.assign(k * k, Failure{});
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        StateId p = stable_[i], q = stable_[j];
        Failure &f = fail_[i * k + j];
        if (!lts.in_f(p) && lts.in_f(q)) {
          f.why = Why::Consistency;
        } else if (!lts.in_f(p) && lts.ready_set(p) != lts.ready_set(q)) {
          f.why = Why::ReadySet;
        } else {
          rel_[i * k + j] = 1;
        }
      }
    refine();
  }

  bool related(StateId p, StateId q) const {
    auto ip = slot_.find(p), iq = slot_.find(q);
    if (ip == slot_.end() || iq == slot_.end())
      return false;
    return rel_[ip->second * stable_.size() + iq->second] != 0;
  }

  /// Why (p, q) is not in the relation. Precondition: !related(p, q).
  Failure failure(StateId p, StateId q) const {
    auto ip = slot_.find(p), iq = slot_.find(q);
    if (ip == slot_.end() || iq == slot_.end())
      return Failure{};
    return fail_[ip->second * stable_.size() + iq->second];
  }

  SimRelation relation() const {
    SimRelation r;
    const std::size_t k = stable_.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (rel_[i * k + j])
          r.pairs.emplace(stable_[i], stable_[j]);
    return r;
  }

  const std::vector<StateId> &stable_states() const { return stable_; }
  WeakMoves &moves() { return moves_; }

private:
  void refine() {
    const std::size_t k = stable_.size();
    std::size_t round = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      ++round;
      std::vector<std::pair<std::size_t, Failure>> kill;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          if (!rel_[i * k + j])
            continue;
          if (auto f = violated(stable_[i], stable_[j]); f) {
            f->round = round;
            kill.emplace_back(i * k + j, *f);
          }
        }
      for (auto &[idx, f] : kill) {
        rel_[idx] = 0;
        fail_[idx] = f;
        changed = true;
      }
    }
  }

  std::optional<Failure> violated(StateId p, StateId q) {
    for (const auto &a : moves_.alphabet()) {
      for (StateId p2 : moves_.of(p, a)) {
        bool matched = false;
        for (StateId q2 : moves_.of(q, a))
          if (related(p2, q2)) {
            matched = true;
            break;
          }
        if (!matched)
          return Failure{Why::Move, 0, a, p2};
      }
    }
    return std::nullopt;
  }

  const Lts *lts_;
  WeakMoves moves_;
  std::vector<StateId> stable_;
  std::map<StateId, std::size_t> slot_;
  std::vector<char> rel_;
  std::vector<Failure> fail_;
};

/// The largest stable ready simulation restricted to the graph.
inline SimRelation largest_stable_sim(const Lts &lts) { return StableSimulation(lts).relation(); }

namespace detail {

/// tau-path from s to target through consistent members, if there is one.
inline std::optional<std::vector<PathStep>> consistent_tau_path(const Lts &lts, StateId s, StateId target) {
  std::map<StateId, StateId> parent;
  std::deque<StateId> q{s};
  parent.emplace(s, s);
  while (!q.empty()) {
    StateId u = q.front();
    q.pop_front();
    if (u == target)
      break;
    for (const auto &e : lts.out[u])
      if (e.label.is_tau() && !lts.in_f(e.dst) && !parent.count(e.dst)) {
        parent.emplace(e.dst, u);
        q.push_back(e.dst);
      }
  }
  if (!parent.count(target))
    return std::nullopt;
  std::vector<PathStep> rev;
  for (StateId u = target; u != s; u = parent.at(u))
    rev.push_back(PathStep{Action::tau(), u});
  return std::vector<PathStep>(rev.rbegin(), rev.rend());
}

/// Replay the deletion record of (p, q) into a path ending at a local failure.
inline Counterexample explain(const Lts &lts, StableSimulation &sim, StateId p,
                              std::vector<StateId> candidates) {
  Counterexample cx;
  for (;;) {
    if (candidates.empty()) {
      cx.reason = cx.path.empty() ? Reason::NoStableDescendantMatch : Reason::NoMatchingMove;
      return cx;
    }
    // The candidate that survived longest gives the most informative trace;
    // its failure round is strictly smaller than the current one.
    StateId q = candidates.front();
    auto best = sim.failure(p, q);
    for (StateId c : candidates) {
      auto f = sim.failure(p, c);
      if (f.round > best.round) {
        best = f;
        q = c;
      }
    }
    cx.against = q;
    switch (best.why) {
    case StableSimulation::Why::Consistency:
    case StableSimulation::Why::NotStable:
      cx.reason = Reason::ConsistencyViolation;
      return cx;
    case StableSimulation::Why::ReadySet:
      cx.reason = Reason::ReadySetMismatch;
      return cx;
    case StableSimulation::Why::Move: {
      // Include the tau-steps from the visible move to the stable target.
      std::vector<StateId> mids;
      for (StateId u : consistent_tau_closure(lts, p))
        for (const auto &e : lts.out[u])
          if (e.label.is_visible() && e.label.name() == best.action && !lts.in_f(e.dst))
            mids.push_back(e.dst);
      bool placed = false;
      for (StateId m : mids) {
        auto tail = consistent_tau_path(lts, m, best.target);
        if (tail) {
          cx.path.push_back(PathStep{Action::visible(best.action), m});
          cx.path.insert(cx.path.end(), tail->begin(), tail->end());
          placed = true;
          break;
        }
      }
      if (!placed)
        cx.path.push_back(PathStep{Action::visible(best.action), best.target});
      p = best.target;
      candidates = sim.moves().of(q, best.action);
      if (candidates.empty()) {
        cx.reason = Reason::NoMatchingMove;
        return cx;
      }
      break;
    }
    }
  }
}

inline RefinementVerdict decide(std::shared_ptr<const Lts> lts, StateId p, StateId q) {
  RefinementVerdict v;
  v.lts = lts;
  v.left = p;
  v.right = q;
  StableSimulation sim(*lts);
  const auto qs = stable_consistent_descendants(*lts, q);
  // Closest unmatched obligation first.
  std::vector<std::pair<std::size_t, StateId>> obligations;
  for (StateId p2 : stable_consistent_descendants(*lts, p))
    obligations.emplace_back(consistent_tau_path(*lts, p, p2)->size(), p2);
  std::sort(obligations.begin(), obligations.end());
  for (const auto &[_, p2] : obligations) {
    bool matched = std::any_of(qs.begin(), qs.end(), [&](StateId q2) { return sim.related(p2, q2); });
    if (!matched) {
      v.holds = false;
      Counterexample cx = explain(*lts, sim, p2, qs);
      auto prefix = *consistent_tau_path(*lts, p, p2);
      cx.path.insert(cx.path.begin(), prefix.begin(), prefix.end());
      v.counterexample = std::move(cx);
      return v;
    }
  }
  v.holds = true;
  v.witness = sim.relation();
  return v;
}

} // namespace detail

/// Decide p ready-simulated-by q over the combined universe of both terms.
inline RefinementVerdict refines(const Term &p, const Term &q, const BuildLimits &limits = {}) {
  const Term roots[] = {p, q};
  auto lts = std::make_shared<const Lts>(build_lts(roots, limits));
  return detail::decide(lts, lts->roots[0], lts->roots[1]);
}

/// Decide refinement between two members of an already built graph.
inline RefinementVerdict refines(std::shared_ptr<const Lts> lts, StateId p, StateId q) {
  return detail::decide(std::move(lts), p, q);
}

/// Kernel of ready simulation.
inline bool equivalent(const Term &p, const Term &q, const BuildLimits &limits = {}) {
  const Term roots[] = {p, q};
  auto lts = std::make_shared<const Lts>(build_lts(roots, limits));
  return detail::decide(lts, lts->roots[0], lts->roots[1]).holds &&
         detail::decide(lts, lts->roots[1], lts->roots[0]).holds;
}

/// Kernel of stable ready simulation; false unless both terms are stable.
inline bool stable_equivalent(const Term &p, const Term &q, const BuildLimits &limits = {}) {
  const Term roots[] = {p, q};
  Lts lts = build_lts(roots, limits);
  StableSimulation sim(lts);
  StateId a = lts.roots[0], b = lts.roots[1];
  return sim.related(a, b) && sim.related(b, a);
}

/// Greatest alternative ready simulation over the members reachable from the
/// roots, computed directly from its three clauses without going through the
/// stable relation.
inline std::set<std::pair<StateId, StateId>> largest_alt_sim(const Lts &lts) {
  const std::vector<StateId> &st = lts.states;
  const std::size_t n = st.size();
  std::map<StateId, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i)
    slot.emplace(st[i], i);
  WeakMoves moves(lts);
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      StateId p = st[i], q = st[j];
      bool both_stable = lts.stable(p) && lts.stable(q);
      rel[i * n + j] = !(both_stable && !lts.in_f(p) && lts.ready_set(p) != lts.ready_set(q));
    }
  auto r = [&](StateId a, StateId b) { return rel[slot.at(a) * n + slot.at(b)] != 0; };
  auto matched = [&](StateId p2, const std::vector<StateId> &qs) {
    return std::any_of(qs.begin(), qs.end(), [&](StateId q2) { return r(p2, q2); });
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i * n + j])
          continue;
        StateId p = st[i], q = st[j];
        bool ok = true;
        for (StateId p2 : moves.descendants(p))
          if (!matched(p2, moves.descendants(q))) {
            ok = false;
            break;
          }
        if (ok && lts.stable(p) && lts.stable(q))
          for (const auto &a : moves.alphabet()) {
            for (StateId p2 : moves.of(p, a))
              if (!matched(p2, moves.of(q, a))) {
                ok = false;
                break;
              }
            if (!ok)
              break;
          }
        if (!ok) {
          rel[i * n + j] = 0;
          changed = true;
        }
      }
  }
  std::set<std::pair<StateId, StateId>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i * n + j])
        out.emplace(st[i], st[j]);
  return out;
}

inline bool alt_refines(const Term &p, const Term &q, const BuildLimits &limits = {}) {
  const Term roots[] = {p, q};
  Lts lts = build_lts(roots, limits);
  return largest_alt_sim(lts).count({lts.roots[0], lts.roots[1]}) != 0;
}

} // namespace cllr

#endif // CLLR_REFINEMENT_HPP
