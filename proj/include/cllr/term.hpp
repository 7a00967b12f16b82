#ifndef CLLR_TERM_HPP
#define CLLR_TERM_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cllr {

/// An action label: either the internal action tau or a named visible action.
class Action {
public:
  Action() = default;

  static Action tau() { return Action{}; }
  static Action visible(std::string name) {
    if (name.empty())
      throw std::invalid_argument("visible action name must be nonempty");
    Action a;
    a.name_ = std::move(name);
    return a;
  }

  bool is_tau() const { return name_.empty(); }
  bool is_visible() const { return !name_.empty(); }
  /// Visible name, or "tau".
  std::string label() const { return is_tau() ? std::string("tau") : name_; }
  const std::string &name() const { return name_; }

  friend bool operator==(const Action &, const Action &) = default;
  friend auto operator<=>(const Action &, const Action &) = default;

private:
  std::string name_; // empty encodes tau
};

using ActionSet = std::set<std::string>;

enum class Kind { Nil, Bottom, Prefix, ExtChoice, Conj, Disj, Parallel, Var, Rec };

class Term;
struct Node;

/// Equations of a recursive specification, keyed by recursion variable.
using RecSpec = std::map<std::string, Term>;
using RecSpecPtr = std::shared_ptr<const RecSpec>;

/// Immutable process term. Copies share structure; equality is syntactic
/// identity (with a cached hash for quick rejection).
class Term {
public:
  Term();
  /// Empty handle used for unused child slots of leaf nodes.
  struct NullTag {};
  explicit Term(NullTag) {}

  static Term nil();
  static Term bottom();
  static Term prefix(Action a, Term body);
  static Term ext_choice(Term l, Term r);
  static Term conj(Term l, Term r);
  static Term disj(Term l, Term r);
  static Term parallel(ActionSet sync, Term l, Term r);
  static Term var(std::string name);
  /// Throws std::invalid_argument when `var` is not bound by `spec` or the
  /// spec is empty.
  static Term rec(std::string var, RecSpecPtr spec);
  static Term rec(std::string var, RecSpec spec) {
    return rec(std::move(var), std::make_shared<const RecSpec>(std::move(spec)));
  }

  Kind kind() const;
  const Action &action() const;    // Prefix
  const Term &left() const;        // binary operators
  const Term &right() const;       // binary operators
  const Term &body() const;        // Prefix
  const ActionSet &sync() const;   // Parallel
  const std::string &name() const; // Var and Rec (the selected variable)
  const RecSpec &spec() const;     // Rec
  const RecSpecPtr &spec_ptr() const;
  /// Right-hand side of the selected variable of a Rec.
  const Term &rec_body() const;

  bool is_binary() const;
  std::size_t hash() const;
  const Node *node() const { return node_.get(); }

  friend bool operator==(const Term &a, const Term &b);
  friend bool operator!=(const Term &a, const Term &b) { return !(a == b); }
  /// Total order used for deterministic containers; not semantically meaningful.
  friend bool operator<(const Term &a, const Term &b);

private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind = Kind::Nil;
  Action action;
  ActionSet sync;
  Term left{Term::NullTag{}};
  Term right{Term::NullTag{}};
  std::string name;
  RecSpecPtr spec;
  std::size_t hash = 0;
};

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t spec_hash(const RecSpec &spec) {
  std::size_t h = 0x51ed27;
  for (const auto &[k, t] : spec) {
    h = hash_mix(h, std::hash<std::string>{}(k));
    h = hash_mix(h, t.hash());
  }
  return h;
}

inline std::shared_ptr<const Node> finish(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  switch (n.kind) {
  case Kind::Nil:
  case Kind::Bottom:
    break;
  case Kind::Prefix:
    h = hash_mix(h, std::hash<std::string>{}(n.action.name()));
    h = hash_mix(h, n.left.hash());
    break;
  case Kind::Parallel:
    for (const auto &a : n.sync)
      h = hash_mix(h, std::hash<std::string>{}(a));
    [[fallthrough]];
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
    h = hash_mix(h, n.left.hash());
    h = hash_mix(h, n.right.hash());
    break;
  case Kind::Var:
    h = hash_mix(h, std::hash<std::string>{}(n.name));
    break;
  case Kind::Rec:
    h = hash_mix(h, std::hash<std::string>{}(n.name));
    h = hash_mix(h, spec_hash(*n.spec));
    break;
  }
  n.hash = h;
  return std::make_shared<const Node>(std::move(n));
}

inline const std::shared_ptr<const Node> &nil_node() {
  static const std::shared_ptr<const Node> n = finish(Node{});
  return n;
}

inline bool spec_equal(const RecSpec &a, const RecSpec &b) {
  if (a.size() != b.size())
    return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second))
      return false;
  return true;
}

inline int compare(const Term &a, const Term &b);

inline int compare_spec(const RecSpec &a, const RecSpec &b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return ia->first < ib->first ? -1 : 1;
    if (int c = compare(ia->second, ib->second))
      return c;
  }
  return 0;
}

inline int compare(const Term &a, const Term &b) {
  if (a.node() == b.node())
    return 0;
  if (a.kind() != b.kind())
    return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
  case Kind::Nil:
  case Kind::Bottom:
    return 0;
  case Kind::Prefix:
    if (a.action() != b.action())
      return a.action() < b.action() ? -1 : 1;
    return compare(a.body(), b.body());
  case Kind::Parallel:
    if (a.sync() != b.sync())
      return a.sync() < b.sync() ? -1 : 1;
    [[fallthrough]];
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
    if (int c = compare(a.left(), b.left()))
      return c;
    return compare(a.right(), b.right());
  case Kind::Var:
    return a.name() == b.name() ? 0 : (a.name() < b.name() ? -1 : 1);
  case Kind::Rec:
    if (a.name() != b.name())
      return a.name() < b.name() ? -1 : 1;
    if (a.spec_ptr() == b.spec_ptr())
      return 0;
    return compare_spec(a.spec(), b.spec());
  }
  return 0;
}

} // namespace detail

inline Term::Term() : node_(detail::nil_node()) {}

inline Term Term::nil() { return Term(); }

inline Term Term::bottom() {
  static const Term b = [] {
    Node n;
    n.kind = Kind::Bottom;
    return Term(detail::finish(std::move(n)));
  }();
  return b;
}

inline Term Term::prefix(Action a, Term body) {
  Node n;
  n.kind = Kind::Prefix;
  n.action = std::move(a);
  n.left = std::move(body);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::ext_choice(Term l, Term r) {
  Node n;
  n.kind = Kind::ExtChoice;
  n.left = std::move(l);
  n.right = std::move(r);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::conj(Term l, Term r) {
  Node n;
  n.kind = Kind::Conj;
  n.left = std::move(l);
  n.right = std::move(r);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::disj(Term l, Term r) {
  Node n;
  n.kind = Kind::Disj;
  n.left = std::move(l);
  n.right = std::move(r);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::parallel(ActionSet sync, Term l, Term r) {
  Node n;
  n.kind = Kind::Parallel;
  n.sync = std::move(sync);
  n.left = std::move(l);
  n.right = std::move(r);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::var(std::string name) {
  if (name.empty())
    throw std::invalid_argument("variable name must be nonempty");
  Node n;
  n.kind = Kind::Var;
  n.name = std::move(name);
  return Term(detail::finish(std::move(n)));
}

inline Term Term::rec(std::string var, RecSpecPtr spec) {
  if (!spec || spec->empty())
    throw std::invalid_argument("recursive specification must be nonempty");
  if (!spec->count(var))
    throw std::invalid_argument("recursion variable " + var +
                                " is not bound by its specification");
  Node n;
  n.kind = Kind::Rec;
  n.name = std::move(var);
  n.spec = std::move(spec);
  return Term(detail::finish(std::move(n)));
}

inline Kind Term::kind() const { return node_->kind; }
inline const Action &Term::action() const { return node_->action; }
inline const Term &Term::left() const { return node_->left; }
inline const Term &Term::right() const { return node_->right; }
inline const Term &Term::body() const { return node_->left; }
inline const ActionSet &Term::sync() const { return node_->sync; }
inline const std::string &Term::name() const { return node_->name; }
inline const RecSpec &Term::spec() const { return *node_->spec; }
inline const RecSpecPtr &Term::spec_ptr() const { return node_->spec; }
inline const Term &Term::rec_body() const { return node_->spec->at(node_->name); }
inline std::size_t Term::hash() const { return node_->hash; }

inline bool Term::is_binary() const {
  switch (kind()) {
  case Kind::ExtChoice:
  case Kind::Conj:
  case Kind::Disj:
  case Kind::Parallel:
    return true;
  default:
    return false;
  }
}

inline bool operator==(const Term &a, const Term &b) {
  if (a.node() == b.node())
    return true;
  if (a.hash() != b.hash())
    return false;
  return detail::compare(a, b) == 0;
}

inline bool operator<(const Term &a, const Term &b) { return detail::compare(a, b) < 0; }

// Convenience constructors used heavily by tests and the generator.
inline Term act(const std::string &a, Term body) {
  return Term::prefix(a == "tau" ? Action::tau() : Action::visible(a), std::move(body));
}
inline Term tau(Term body) { return Term::prefix(Action::tau(), std::move(body)); }

} // namespace cllr

template <> struct std::hash<cllr::Term> {
  std::size_t operator()(const cllr::Term &t) const noexcept { return t.hash(); }
};

#endif // CLLR_TERM_HPP
