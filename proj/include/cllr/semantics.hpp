#ifndef CLLR_SEMANTICS_HPP
#define CLLR_SEMANTICS_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cllr/errors.hpp"
#include "cllr/substitution.hpp"
#include "cllr/term.hpp"

namespace cllr {

struct BuildLimits {
  std::size_t max_states = 10000;
  std::size_t max_unfold_depth = 1000;
};

using Transition = std::pair<Action, Term>;
using Transitions = std::vector<Transition>;

/// Memoising evaluator of the operational rules. Not thread-safe; use one
/// engine per thread.
///
/// For every operator the tau-moves of the operands are available before the
/// visible moves of the compound are assembled, so the negative premises
/// "operand has no tau-move" are decided on already-complete information.
class StepEngine {
public:
  explicit StepEngine(std::size_t max_unfold_depth = BuildLimits{}.max_unfold_depth)
      : max_depth_(max_unfold_depth) {}

  const Transitions &step(const Term &t) {
    if (auto it = memo_.find(t); it != memo_.end())
      return it->second;
    Transitions r = compute(t);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return memo_.emplace(t, std::move(r)).first->second;
  }

  static bool has_tau(const Transitions &ts) {
    return std::any_of(ts.begin(), ts.end(), [](const Transition &x) { return x.first.is_tau(); });
  }

private:
  Transitions compute(const Term &t) {
    Transitions out;
    switch (t.kind()) {
    case Kind::Nil:
    case Kind::Bottom:
      return out;
    case Kind::Var:
      throw std::invalid_argument("transitions are defined on closed terms only; free variable " +
                                  t.name());
    case Kind::Prefix:
      out.emplace_back(t.action(), t.body());
      return out;
    case Kind::Disj:
      out.emplace_back(Action::tau(), t.left());
      out.emplace_back(Action::tau(), t.right());
      return out;
    case Kind::Rec: {
      if (depth_ >= max_depth_)
        throw UnfoldDepthExceeded(max_depth_);
      ++depth_;
      struct Guard {
        std::size_t &d;
        ~Guard() { --d; }
      } guard{depth_};
      Term unfolded = unfold_rec(t);
      return step(unfolded);
    }
    default:
      break;
    }

    // Copies: the memo table may grow while the second operand is evaluated.
    const Transitions ls = step(t.left());
    const Transitions rs = step(t.right());
    const bool l_stable = !has_tau(ls);
    const bool r_stable = !has_tau(rs);

    switch (t.kind()) {
    case Kind::ExtChoice:
      for (const auto &[a, y] : ls)
        if (a.is_tau())
          out.emplace_back(a, Term::ext_choice(y, t.right()));
        else if (r_stable)
          out.emplace_back(a, y);
      for (const auto &[a, y] : rs)
        if (a.is_tau())
          out.emplace_back(a, Term::ext_choice(t.left(), y));
        else if (l_stable)
          out.emplace_back(a, y);
      break;
    case Kind::Conj:
      for (const auto &[a, y] : ls)
        if (a.is_tau())
          out.emplace_back(a, Term::conj(y, t.right()));
      for (const auto &[a, y] : rs)
        if (a.is_tau())
          out.emplace_back(a, Term::conj(t.left(), y));
      for (const auto &[a, y1] : ls)
        if (a.is_visible())
          for (const auto &[b, y2] : rs)
            if (a == b)
              out.emplace_back(a, Term::conj(y1, y2));
      break;
    case Kind::Parallel: {
      const ActionSet &sync = t.sync();
      for (const auto &[a, y] : ls) {
        if (a.is_tau())
          out.emplace_back(a, Term::parallel(sync, y, t.right()));
        else if (!sync.count(a.name()) && r_stable)
          out.emplace_back(a, Term::parallel(sync, y, t.right()));
      }
      for (const auto &[a, y] : rs) {
        if (a.is_tau())
          out.emplace_back(a, Term::parallel(sync, t.left(), y));
        else if (!sync.count(a.name()) && l_stable)
          out.emplace_back(a, Term::parallel(sync, t.left(), y));
      }
      for (const auto &[a, y1] : ls)
        if (a.is_visible() && sync.count(a.name()))
          for (const auto &[b, y2] : rs)
            if (a == b)
              out.emplace_back(a, Term::parallel(sync, y1, y2));
      break;
    }
    default:
      break;
    }
    return out;
  }

  std::unordered_map<Term, Transitions> memo_;
  std::size_t max_depth_;
  std::size_t depth_ = 0;
};

/// All transitions of a closed term.
inline Transitions step(const Term &t, const BuildLimits &limits = {}) {
  StepEngine engine(limits.max_unfold_depth);
  return engine.step(t);
}

using StateId = std::size_t;

struct Edge {
  Action label;
  StateId dst;
  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Finite fragment of the transition system: the closure of the roots under
/// transitions together with the operand subterms and unfoldings whose
/// inconsistency the predicate rules consult.
struct Lts {
  std::vector<Term> universe;
  std::unordered_map<Term, StateId> index;
  std::vector<std::vector<Edge>> out;
  std::vector<char> inconsistent;
  std::vector<StateId> roots;
  /// Universe members reachable from a root by transitions, BFS order.
  std::vector<StateId> states;

  StateId root() const { return roots.at(0); }
  std::size_t size() const { return universe.size(); }
  bool in_f(StateId s) const { return inconsistent[s] != 0; }

  bool stable(StateId s) const {
    return std::none_of(out[s].begin(), out[s].end(),
                        [](const Edge &e) { return e.label.is_tau(); });
  }
  std::set<Action> ready_set(StateId s) const {
    std::set<Action> r;
    for (const auto &e : out[s])
      r.insert(e.label);
    return r;
  }
  std::optional<StateId> find(const Term &t) const {
    auto it = index.find(t);
    if (it == index.end())
      return std::nullopt;
    return it->second;
  }
  StateId id(const Term &t) const { return index.at(t); }
  /// Visible actions labelling any edge.
  std::set<std::string> alphabet() const {
    std::set<std::string> r;
    for (const auto &es : out)
      for (const auto &e : es)
        if (e.label.is_visible())
          r.insert(e.label.name());
    return r;
  }

  /// Adds a member with explicit edges; used to assemble graphs by hand.
  StateId add_state(const Term &t) {
    auto [it, fresh] = index.emplace(t, universe.size());
    if (fresh) {
      universe.push_back(t);
      out.emplace_back();
      inconsistent.push_back(0);
    }
    return it->second;
  }
};

namespace detail {

/// True when some label has every one of its derivatives satisfying `pred`.
template <class Pred>
bool some_label_all(const std::vector<Edge> &es, Pred pred) {
  std::map<Action, bool> all;
  for (const auto &e : es) {
    auto [it, fresh] = all.emplace(e.label, true);
    it->second = it->second && pred(e.dst);
  }
  return std::any_of(all.begin(), all.end(), [](const auto &kv) { return kv.second; });
}

/// Universe members whose F status the predicate rules read for `t`.
inline void support_terms(const Term &t, std::vector<Term> &out) {
  switch (t.kind()) {
  case Kind::Prefix:
    out.push_back(t.body());
    break;
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
  case Kind::Parallel:
    out.push_back(t.left());
    out.push_back(t.right());
    break;
  case Kind::Rec:
    out.push_back(unfold_rec(t));
    break;
  default:
    break;
  }
}

} // namespace detail

inline std::vector<char> compute_inconsistent(const Lts &lts);

inline void compute_reachable(Lts &lts) {
  std::vector<char> seen(lts.size(), 0);
  std::deque<StateId> q;
  lts.states.clear();
  for (StateId r : lts.roots)
    if (!seen[r]) {
      seen[r] = 1;
      q.push_back(r);
    }
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    lts.states.push_back(s);
    for (const auto &e : lts.out[s])
      if (!seen[e.dst]) {
        seen[e.dst] = 1;
        q.push_back(e.dst);
      }
  }
}

/// Build the finite universe of several roots; throws StateBoundExceeded.
inline Lts build_lts(std::span<const Term> roots, const BuildLimits &limits = {}) {
  Lts lts;
  StepEngine engine(limits.max_unfold_depth);
  std::deque<StateId> work;
  auto add = [&](const Term &t) {
    if (auto id = lts.find(t))
      return *id;
    if (lts.size() >= limits.max_states)
      throw StateBoundExceeded(lts.size() + 1);
    StateId id = lts.add_state(t);
    work.push_back(id);
    return id;
  };
  for (const auto &r : roots)
    lts.roots.push_back(add(r));
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    const Term t = lts.universe[s];
    const Transitions ts = engine.step(t);
    std::vector<Edge> edges;
    for (const auto &[a, y] : ts)
      edges.push_back(Edge{a, add(y)});
    lts.out[s] = std::move(edges);
    std::vector<Term> support;
    detail::support_terms(t, support);
    for (const auto &u : support)
      add(u);
  }
  lts.inconsistent = compute_inconsistent(lts);
  compute_reachable(lts);
  return lts;
}

inline Lts build_lts(const Term &p, const BuildLimits &limits = {}) {
  return build_lts(std::span<const Term>(&p, 1), limits);
}

/// Stable members reachable from `s` by tau-steps, ignoring F.
inline std::vector<StateId> stable_tau_descendants(const Lts &lts, StateId s) {
  std::vector<char> seen(lts.size(), 0);
  std::vector<StateId> stack{s}, out;
  seen[s] = 1;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    bool stable = true;
    for (const auto &e : lts.out[u])
      if (e.label.is_tau()) {
        stable = false;
        if (!seen[e.dst]) {
          seen[e.dst] = 1;
          stack.push_back(e.dst);
        }
      }
    if (stable)
      out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least fixpoint of the predicate rules over the universe, by worklist.
/// Transitions must be complete; F never feeds back into them.
inline std::vector<char> compute_inconsistent(const Lts &lts) {
  const std::size_t n = lts.size();
  std::vector<char> f(n, 0);
  std::vector<std::vector<StateId>> dependents(n);
  std::vector<std::vector<StateId>> operands(n);
  std::vector<std::vector<StateId>> stable_desc(n);
  std::vector<char> static_f(n, 0);

  for (StateId u = 0; u < n; ++u) {
    const Term &t = lts.universe[u];
    std::vector<Term> support;
    detail::support_terms(t, support);
    for (const auto &s : support) {
      StateId v = lts.id(s);
      operands[u].push_back(v);
      dependents[v].push_back(u);
    }
    if (t.kind() == Kind::Bottom)
      static_f[u] = 1;
    if (t.kind() == Kind::Conj) {
      for (const auto &e : lts.out[u])
        dependents[e.dst].push_back(u);
      if (lts.stable(u)) {
        auto li = lts.ready_set(operands[u][0]);
        auto ri = lts.ready_set(operands[u][1]);
        for (const auto &a : li)
          if (a.is_visible() && !ri.count(a))
            static_f[u] = 1;
        for (const auto &a : ri)
          if (a.is_visible() && !li.count(a))
            static_f[u] = 1;
      }
    }
    if (t.kind() == Kind::Conj || t.kind() == Kind::Rec) {
      stable_desc[u] = stable_tau_descendants(lts, u);
      for (StateId v : stable_desc[u])
        dependents[v].push_back(u);
    }
  }

  auto all_f = [&](const std::vector<StateId> &vs) {
    return std::all_of(vs.begin(), vs.end(), [&](StateId v) { return f[v] != 0; });
  };
  auto eval = [&](StateId u) -> bool {
    if (static_f[u])
      return true;
    const auto &ops = operands[u];
    switch (lts.universe[u].kind()) {
    case Kind::Prefix:
      return f[ops[0]];
    case Kind::Disj:
      return f[ops[0]] && f[ops[1]];
    case Kind::ExtChoice:
    case Kind::Parallel:
      return f[ops[0]] || f[ops[1]];
    case Kind::Conj: {
      if (f[ops[0]] || f[ops[1]])
        return true;
      if (detail::some_label_all(lts.out[u], [&](StateId v) { return f[v] != 0; }))
        return true;
      return all_f(stable_desc[u]);
    }
    case Kind::Rec:
      return f[ops[0]] || all_f(stable_desc[u]);
    default:
      return false;
    }
  };

  std::deque<StateId> work;
  std::vector<char> queued(n, 1);
  for (StateId u = 0; u < n; ++u)
    work.push_back(u);
  while (!work.empty()) {
    StateId u = work.front();
    work.pop_front();
    queued[u] = 0;
    if (f[u] || !eval(u))
      continue;
    f[u] = 1;
    for (StateId d : dependents[u])
      if (!f[d] && !queued[d]) {
        queued[d] = 1;
        work.push_back(d);
      }
  }
  return f;
}

/// Consistent tau-closure of `s`: members reachable by tau-paths avoiding F.
inline std::vector<StateId> consistent_tau_closure(const Lts &lts, StateId s) {
  std::vector<StateId> out;
  if (lts.in_f(s))
    return out;
  std::vector<char> seen(lts.size(), 0);
  std::vector<StateId> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (const auto &e : lts.out[u])
      if (e.label.is_tau() && !seen[e.dst] && !lts.in_f(e.dst)) {
        seen[e.dst] = 1;
        stack.push_back(e.dst);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Stable q with s =eps=>_F| q.
inline std::vector<StateId> stable_consistent_descendants(const Lts &lts, StateId s) {
  std::vector<StateId> out;
  for (StateId u : consistent_tau_closure(lts, s))
    if (lts.stable(u))
      out.push_back(u);
  return out;
}

/// Stable q with s =a=>_F| q, every state on the way consistent.
inline std::vector<StateId> weak_visible_step(const Lts &lts, StateId s, const std::string &a) {
  std::set<StateId> out;
  for (StateId u : consistent_tau_closure(lts, s))
    for (const auto &e : lts.out[u])
      if (e.label.is_visible() && e.label.name() == a && !lts.in_f(e.dst))
        for (StateId q : stable_consistent_descendants(lts, e.dst))
          out.insert(q);
  return {out.begin(), out.end()};
}

struct ValidationReport {
  bool tau_pure = true;
  bool lts1 = true;
  bool lts2 = true;
  bool forward_tau_f = true;
  std::vector<std::pair<StateId, std::string>> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Checks tau-purity, backward propagation, divergence-is-inconsistency and
/// forward propagation of F along tau on every universe member.
inline ValidationReport validate_llts(const Lts &lts) {
  ValidationReport r;
  for (StateId s = 0; s < lts.size(); ++s) {
    const auto &es = lts.out[s];
    bool has_tau = false, has_vis = false;
    for (const auto &e : es)
      (e.label.is_tau() ? has_tau : has_vis) = true;
    if (has_tau && has_vis) {
      r.tau_pure = false;
      r.counterexamples.emplace_back(s, "tau-purity");
    }
    if (!lts.in_f(s)) {
      if (detail::some_label_all(es, [&](StateId v) { return lts.in_f(v); })) {
        r.lts1 = false;
        r.counterexamples.emplace_back(s, "LTS1");
      }
      if (stable_consistent_descendants(lts, s).empty()) {
        r.lts2 = false;
        r.counterexamples.emplace_back(s, "LTS2");
      }
    } else {
      for (const auto &e : es)
        if (e.label.is_tau() && !lts.in_f(e.dst)) {
          r.forward_tau_f = false;
          r.counterexamples.emplace_back(s, "forward-tau-F");
          break;
        }
    }
  }
  return r;
}

} // namespace cllr

#endif // CLLR_SEMANTICS_HPP
