// Slow, direct oracles used to cross-check the library.
#ifndef CLLR_TESTS_ORACLES_HPP
#define CLLR_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cllr/semantics.hpp"
#include "cllr/substitution.hpp"

namespace oracle {

using cllr::Kind;
using cllr::Lts;
using cllr::StateId;

inline bool has_label(const Lts &lts, StateId s, const cllr::Action &a) {
  for (const auto &e : lts.out[s])
    if (e.label == a)
      return true;
  return false;
}

/// All y with s --tau-->* y and y stable, ignoring F.
inline std::set<StateId> stable_tau_star(const Lts &lts, StateId s) {
  std::set<StateId> seen{s}, out;
  std::vector<StateId> todo{s};
  while (!todo.empty()) {
    StateId u = todo.back();
    todo.pop_back();
    if (!has_label(lts, u, cllr::Action::tau()))
      out.insert(u);
    for (const auto &e : lts.out[u])
      if (e.label.is_tau() && seen.insert(e.dst).second)
        todo.push_back(e.dst);
  }
  return out;
}

/// Kleene iteration of the predicate rules from the empty set, every rule
/// re-evaluated on every member in every round.
inline std::vector<char> naive_f(const Lts &lts) {
  const std::size_t n = lts.size();
  std::vector<char> f(n, 0);
  for (;;) {
    std::vector<char> next(n, 0);
    auto F = [&](const cllr::Term &t) { return f[lts.id(t)] != 0; };
    for (StateId u = 0; u < n; ++u) {
      const cllr::Term &t = lts.universe[u];
      bool fire = false;
      switch (t.kind()) {
      case Kind::Bottom: // Rp1
        fire = true;
        break;
      case Kind::Prefix: // Rp2
        fire = F(t.body());
        break;
      case Kind::Disj: // Rp3
        fire = F(t.left()) && F(t.right());
        break;
      case Kind::ExtChoice: // Rp4, Rp5
      case Kind::Parallel:  // Rp6, Rp7
        fire = F(t.left()) || F(t.right());
        break;
      case Kind::Conj: {
        fire = F(t.left()) || F(t.right()); // Rp8, Rp9
        StateId l = lts.id(t.left()), r = lts.id(t.right());
        bool stable = !has_label(lts, u, cllr::Action::tau());
        // Rp10, Rp11
        for (const auto &e : lts.out[l])
          if (stable && e.label.is_visible() && !has_label(lts, r, e.label))
            fire = true;
        for (const auto &e : lts.out[r])
          if (stable && e.label.is_visible() && !has_label(lts, l, e.label))
            fire = true;
        // Rp12
        std::map<cllr::Action, bool> all;
        for (const auto &e : lts.out[u]) {
          auto it = all.emplace(e.label, true).first;
          it->second = it->second && f[e.dst];
        }
        for (const auto &kv : all)
          fire = fire || kv.second;
        // Rp13
        bool every = true;
        for (StateId y : stable_tau_star(lts, u))
          every = every && f[y];
        fire = fire || every;
        break;
      }
      case Kind::Rec: {
        fire = F(cllr::unfold_rec(t)); // Rp14
        bool every = true;             // Rp15
        for (StateId y : stable_tau_star(lts, u))
          every = every && f[y];
        fire = fire || every;
        break;
      }
      default:
        break;
      }
      next[u] = fire;
    }
    if (next == f)
      return f;
    f = std::move(next);
  }
}

/// Stable, consistent y reachable from s by tau-steps through consistent
/// states (s included).
inline std::set<StateId> eps_f(const Lts &lts, StateId s) {
  std::set<StateId> out;
  if (lts.in_f(s))
    return out;
  std::set<StateId> seen{s};
  std::vector<StateId> todo{s};
  while (!todo.empty()) {
    StateId u = todo.back();
    todo.pop_back();
    bool stable = true;
    for (const auto &e : lts.out[u])
      if (e.label.is_tau()) {
        stable = false;
        if (!lts.in_f(e.dst) && seen.insert(e.dst).second)
          todo.push_back(e.dst);
      }
    if (stable)
      out.insert(u);
  }
  return out;
}

/// All consistent states reachable by consistent tau-steps (s included).
inline std::set<StateId> eps_closure(const Lts &lts, StateId s) {
  std::set<StateId> seen;
  if (lts.in_f(s))
    return seen;
  seen.insert(s);
  std::vector<StateId> todo{s};
  while (!todo.empty()) {
    StateId u = todo.back();
    todo.pop_back();
    for (const auto &e : lts.out[u])
      if (e.label.is_tau() && !lts.in_f(e.dst) && seen.insert(e.dst).second)
        todo.push_back(e.dst);
  }
  return seen;
}

inline std::set<StateId> weak_a(const Lts &lts, StateId s, const std::string &a) {
  std::set<StateId> out;
  for (StateId u : eps_closure(lts, s))
    for (const auto &e : lts.out[u])
      if (e.label.is_visible() && e.label.name() == a && !lts.in_f(e.dst))
        for (StateId y : eps_f(lts, e.dst))
          out.insert(y);
  return out;
}

/// Union of all stable ready simulations among the given stable states,
/// found by enumerating every subset of pairs. Only feasible for at most
/// four states.
inline std::set<std::pair<StateId, StateId>> brute_force_stable_sim(const Lts &lts,
                                                                    const std::vector<StateId> &stable) {
  const std::size_t k = stable.size();
  const std::size_t m = k * k;
  std::vector<std::pair<StateId, StateId>> pairs;
  for (StateId p : stable)
    for (StateId q : stable)
      pairs.emplace_back(p, q);
  std::set<std::string> alphabet;
  for (const auto &es : lts.out)
    for (const auto &e : es)
      if (e.label.is_visible())
        alphabet.insert(e.label.name());
  std::map<std::pair<StateId, std::string>, std::set<StateId>> w;
  for (StateId p : stable)
    for (const auto &a : alphabet)
      w[{p, a}] = weak_a(lts, p, a);

  std::set<std::pair<StateId, StateId>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::set<std::pair<StateId, StateId>> rel;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1)
        rel.insert(pairs[i]);
    bool ok = true;
    for (const auto &[p, q] : rel) {
      if (!lts.in_f(p) && lts.in_f(q)) // RS2
        ok = false;
      if (!lts.in_f(p) && lts.ready_set(p) != lts.ready_set(q)) // RS4
        ok = false;
      for (const auto &a : alphabet) // RS3
        for (StateId p2 : w[{p, a}]) {
          bool found = false;
          for (StateId q2 : w[{q, a}])
            found = found || rel.count({p2, q2});
          ok = ok && found;
        }
      if (!ok)
        break;
    }
    if (ok)
      best.insert(rel.begin(), rel.end());
  }
  return best;
}

} // namespace oracle

#endif // CLLR_TESTS_ORACLES_HPP
