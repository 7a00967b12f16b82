#ifndef CLLR_SUBSTITUTION_HPP
#define CLLR_SUBSTITUTION_HPP

#include <cctype>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "cllr/analysis.hpp"
#include "cllr/term.hpp"

namespace cllr {

using Bindings = std::map<std::string, Term>;

/// Deterministic fresh variant of `base` avoiding `taken`: base1, base2, ...
inline std::string fresh_name(const std::string &base, const VarSet &taken) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back())))
    stem.pop_back();
  if (stem.empty())
    stem = "X";
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken.count(candidate))
      return candidate;
  }
}

namespace detail {

inline Term substitute_impl(const Term &t, const Bindings &b, const VarSet &replacement_fv) {
  switch (t.kind()) {
  case Kind::Nil:
  case Kind::Bottom:
    return t;
  case Kind::Var: {
    auto it = b.find(t.name());
    return it == b.end() ? t : it->second;
  }
  case Kind::Prefix: {
    Term body = substitute_impl(t.body(), b, replacement_fv);
    return body.node() == t.body().node() ? t : Term::prefix(t.action(), body);
  }
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
  case Kind::Parallel: {
    Term l = substitute_impl(t.left(), b, replacement_fv);
    Term r = substitute_impl(t.right(), b, replacement_fv);
    if (l.node() == t.left().node() && r.node() == t.right().node())
      return t;
    switch (t.kind()) {
    case Kind::ExtChoice:
      return Term::ext_choice(l, r);
    case Kind::Conj:
      return Term::conj(l, r);
    case Kind::Disj:
      return Term::disj(l, r);
    default:
      return Term::parallel(t.sync(), l, r);
    }
  }
  case Kind::Rec: {
    Bindings inner = b;
    for (const auto &[v, _] : t.spec())
      inner.erase(v);
    if (inner.empty())
      return t;
    // Only variables actually free in the spec matter.
    VarSet fv = free_vars(t);
    bool touches = false;
    for (const auto &[v, _] : inner)
      touches = touches || fv.count(v);
    if (!touches)
      return t;

    VarSet inner_fv;
    for (const auto &[v, r] : inner)
      if (fv.count(v))
        for (const auto &w : free_vars(r))
          inner_fv.insert(w);

    // Rename binders that would capture a free variable of a replacement.
    Bindings renaming;
    VarSet taken = inner_fv;
    for (const auto &v : fv)
      taken.insert(v);
    for (const auto &[v, _] : t.spec())
      taken.insert(v);
    for (const auto &[v, _] : t.spec()) {
      if (inner_fv.count(v)) {
        std::string nv = fresh_name(v, taken);
        taken.insert(nv);
        renaming.emplace(v, Term::var(nv));
      }
    }
    for (const auto &[v, r] : renaming)
      inner[v] = r;

    RecSpec spec;
    for (const auto &[v, rhs] : t.spec()) {
      std::string nv = renaming.count(v) ? renaming.at(v).name() : v;
      spec.emplace(nv, substitute_impl(rhs, inner, replacement_fv));
    }
    std::string sel = renaming.count(t.name()) ? renaming.at(t.name()).name() : t.name();
    return Term::rec(sel, std::move(spec));
  }
  }
  return t;
}

} // namespace detail

/// Simultaneous capture-avoiding replacement of free occurrences.
inline Term substitute(const Term &c, const Bindings &bindings) {
  if (bindings.empty())
    return c;
  VarSet fv;
  for (const auto &[_, r] : bindings)
    for (const auto &w : free_vars(r))
      fv.insert(w);
  return detail::substitute_impl(c, bindings, fv);
}

inline Term substitute(const Term &c, const std::string &x, const Term &p) {
  return substitute(c, Bindings{{x, p}});
}

/// <t|E>: every free occurrence of a variable bound by E replaced by <X|E>.
inline Term plug(const Term &t, const RecSpecPtr &spec) {
  Bindings b;
  for (const auto &[v, _] : *spec)
    b.emplace(v, Term::rec(v, spec));
  return substitute(t, b);
}

/// One-step unfolding of a recursion operator: <t_X|E>.
inline Term unfold_rec(const Term &rec) { return plug(rec.rec_body(), rec.spec_ptr()); }

namespace detail {

inline void unfold_positions(const Term &t, std::vector<Term> &out) {
  switch (t.kind()) {
  case Kind::Nil:
  case Kind::Bottom:
  case Kind::Var:
    return;
  case Kind::Rec:
    out.push_back(unfold_rec(t));
    return;
  case Kind::Prefix: {
    std::vector<Term> inner;
    unfold_positions(t.body(), inner);
    for (auto &s : inner)
      out.push_back(Term::prefix(t.action(), std::move(s)));
    return;
  }
  default: {
    auto rebuild = [&](Term l, Term r) {
      switch (t.kind()) {
      case Kind::ExtChoice:
        return Term::ext_choice(std::move(l), std::move(r));
      case Kind::Conj:
        return Term::conj(std::move(l), std::move(r));
      case Kind::Disj:
        return Term::disj(std::move(l), std::move(r));
      default:
        return Term::parallel(t.sync(), std::move(l), std::move(r));
      }
    };
    std::vector<Term> ls, rs;
    unfold_positions(t.left(), ls);
    unfold_positions(t.right(), rs);
    for (auto &l : ls)
      out.push_back(rebuild(std::move(l), t.right()));
    for (auto &r : rs)
      out.push_back(rebuild(t.left(), std::move(r)));
    return;
  }
  }
}

} // namespace detail

/// All one-step unfoldings: each recursion operator outside every recursion
/// scope replaced by its unfolding. Duplicates removed, first-seen order kept.
inline std::vector<Term> unfold_one(const Term &t) {
  std::vector<Term> raw;
  detail::unfold_positions(t, raw);
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  for (auto &s : raw)
    if (seen.insert(s).second)
      out.push_back(std::move(s));
  return out;
}

/// Terms reachable from `from` by at most `max_steps` one-step unfoldings,
/// stopping early once `limit` terms were seen.
inline bool unfolds_to(const Term &from, const Term &to, std::size_t max_steps,
                       std::size_t limit = 2000) {
  std::unordered_set<Term> seen{from};
  std::vector<Term> frontier{from};
  if (from == to)
    return true;
  for (std::size_t k = 0; k < max_steps && !frontier.empty(); ++k) {
    std::vector<Term> next;
    for (const auto &t : frontier)
      for (auto &s : unfold_one(t)) {
        if (s == to)
          return true;
        if (seen.size() < limit && seen.insert(s).second)
          next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return false;
}

} // namespace cllr

#endif // CLLR_SUBSTITUTION_HPP
