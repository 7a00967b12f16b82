#ifndef CLLR_ANALYSIS_HPP
#define CLLR_ANALYSIS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "cllr/term.hpp"

namespace cllr {

using VarSet = std::set<std::string>;

inline void collect_free_vars(const Term &t, VarSet &bound, VarSet &out) {
  switch (t.kind()) {
  case Kind::Nil:
  case Kind::Bottom:
    return;
  case Kind::Prefix:
    collect_free_vars(t.body(), bound, out);
    return;
  case Kind::Var:
    if (!bound.count(t.name()))
      out.insert(t.name());
    return;
  case Kind::Rec: {
    std::vector<std::string> added;
    for (const auto &[v, _] : t.spec())
      if (bound.insert(v).second)
        added.push_back(v);
    for (const auto &[_, rhs] : t.spec())
      collect_free_vars(rhs, bound, out);
    for (const auto &v : added)
      bound.erase(v);
    return;
  }
  default:
    collect_free_vars(t.left(), bound, out);
    collect_free_vars(t.right(), bound, out);
    return;
  }
}

inline VarSet free_vars(const Term &t) {
  VarSet bound, out;
  collect_free_vars(t, bound, out);
  return out;
}

inline bool is_closed(const Term &t) { return free_vars(t).empty(); }

/// Occurrence summary of one variable in a term.
///
/// `weakly_guarded` holds when every occurrence sits under some prefix or
/// disjunction (i.e. is guarded in the weak-or-strong sense); `strongly_guarded`
/// requires a visible prefix above every occurrence. Both are vacuously true
/// for a variable that does not occur.
struct VarStatus {
  bool free = false;
  bool unfolded = false;
  bool active = false;
  bool one_active = false;
  bool strongly_guarded = true;
  bool weakly_guarded = true;
  bool in_conjunction_scope = false;
  std::size_t occurrence_count = 0;
};

namespace detail {

struct OccurrenceScan {
  std::string target;
  std::size_t count = 0;
  std::size_t strong = 0;
  std::size_t guarded = 0;
  std::size_t unfolded = 0;
  std::size_t active = 0;
  bool under_conj = false;

  void visit(const Term &t, bool strong_ctx, bool guard_ctx, bool in_rec, bool conj_ctx) {
    switch (t.kind()) {
    case Kind::Nil:
    case Kind::Bottom:
      return;
    case Kind::Var:
      if (t.name() != target)
        return;
      ++count;
      if (strong_ctx)
        ++strong;
      if (guard_ctx)
        ++guarded;
      if (!in_rec)
        ++unfolded;
      if (!in_rec && !guard_ctx)
        ++active;
      if (conj_ctx)
        under_conj = true;
      return;
    case Kind::Prefix: {
      bool vis = t.action().is_visible();
      visit(t.body(), strong_ctx || vis, true, in_rec, conj_ctx);
      return;
    }
    case Kind::Disj:
      visit(t.left(), strong_ctx, true, in_rec, conj_ctx);
      visit(t.right(), strong_ctx, true, in_rec, conj_ctx);
      return;
    case Kind::Conj:
      visit(t.left(), strong_ctx, guard_ctx, in_rec, true);
      visit(t.right(), strong_ctx, guard_ctx, in_rec, true);
      return;
    case Kind::ExtChoice:
    case Kind::Parallel:
      visit(t.left(), strong_ctx, guard_ctx, in_rec, conj_ctx);
      visit(t.right(), strong_ctx, guard_ctx, in_rec, conj_ctx);
      return;
    case Kind::Rec:
      // A specification rebinding the target shadows it.
      if (t.spec().count(target))
        return;
      for (const auto &[_, rhs] : t.spec())
        visit(rhs, strong_ctx, guard_ctx, true, conj_ctx);
      return;
    }
  }
};

} // namespace detail

inline VarStatus variable_status(const Term &t, const std::string &x) {
  detail::OccurrenceScan scan{x};
  scan.visit(t, false, false, false, false);
  VarStatus s;
  s.occurrence_count = scan.count;
  s.free = scan.count > 0;
  s.strongly_guarded = scan.strong == scan.count;
  s.weakly_guarded = scan.guarded == scan.count;
  s.in_conjunction_scope = scan.under_conj;
  s.unfolded = scan.count > 0 && scan.unfolded == scan.count;
  s.active = scan.count > 0 && scan.active == scan.count;
  s.one_active = scan.count == 1 && s.active;
  return s;
}

/// Every occurrence of every bound variable in every right-hand side is
/// under a prefix or a disjunction operand.
inline bool is_guarded_spec(const RecSpec &spec) {
  for (const auto &[bound, _] : spec)
    for (const auto &[__, rhs] : spec)
      if (!variable_status(rhs, bound).weakly_guarded)
        return false;
  return true;
}

/// First (variable, equation) pair violating guardedness, searching every
/// specification nested anywhere in `t`.
struct GuardViolation {
  std::string variable;
  std::string equation;
};

inline std::optional<GuardViolation> find_unguarded(const Term &t) {
  switch (t.kind()) {
  case Kind::Nil:
  case Kind::Bottom:
  case Kind::Var:
    return std::nullopt;
  case Kind::Prefix:
    return find_unguarded(t.body());
  case Kind::Rec:
    for (const auto &[bound, _] : t.spec())
      for (const auto &[eq, rhs] : t.spec())
        if (!variable_status(rhs, bound).weakly_guarded)
          return GuardViolation{bound, eq};
    for (const auto &[_, rhs] : t.spec())
      if (auto v = find_unguarded(rhs))
        return v;
    return std::nullopt;
  default:
    if (auto v = find_unguarded(t.left()))
      return v;
    return find_unguarded(t.right());
  }
}

/// Degree |t|: leaves and recursion operators count 1.
inline std::size_t degree(const Term &t) {
  switch (t.kind()) {
  case Kind::Prefix:
    return degree(t.body()) + 1;
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
  case Kind::Parallel:
    return degree(t.left()) + degree(t.right()) + 1;
  default:
    return 1;
  }
}

/// G(t): number of recursion operators not under a prefix or disjunction.
inline std::size_t unguarded_rec_count(const Term &t) {
  switch (t.kind()) {
  case Kind::Rec:
    return 1;
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Parallel:
    return unguarded_rec_count(t.left()) + unguarded_rec_count(t.right());
  default:
    return 0;
  }
}

/// Stratum of a literal: (G, degree) for transition literals, Top for F.
struct StratRank {
  bool top = false;
  std::size_t g = 0;
  std::size_t d = 0;

  static StratRank of_transition(const Term &source) {
    return StratRank{false, unguarded_rec_count(source), degree(source)};
  }
  static StratRank of_predicate() { return StratRank{true, 0, 0}; }

  friend bool operator==(const StratRank &, const StratRank &) = default;
  friend std::strong_ordering operator<=>(const StratRank &a, const StratRank &b) {
    if (a.top || b.top)
      return a.top == b.top ? std::strong_ordering::equal
                            : (a.top ? std::strong_ordering::greater : std::strong_ordering::less);
    if (auto c = a.g <=> b.g; c != 0)
      return c;
    return a.d <=> b.d;
  }
};

/// Free variables with at least one occurrence outside every prefix and
/// disjunction.
inline VarSet unguarded_free_vars(const Term &t) {
  VarSet out;
  for (const auto &x : free_vars(t)) {
    detail::OccurrenceScan scan{x};
    scan.visit(t, false, false, false, false);
    if (scan.guarded < scan.count)
      out.insert(x);
  }
  return out;
}

inline std::size_t folding_number(const Term &t, const std::string &x) {
  switch (t.kind()) {
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Parallel:
    return folding_number(t.left(), x) + folding_number(t.right(), x);
  case Kind::Rec: {
    if (!unguarded_free_vars(t).count(x))
      return 0;
    std::size_t sum = 1;
    for (const auto &[_, rhs] : t.spec())
      sum += folding_number(rhs, x);
    return sum;
  }
  default:
    return 0;
  }
}

} // namespace cllr

#endif // CLLR_ANALYSIS_HPP
