#ifndef CLLR_EXPORT_HPP
#define CLLR_EXPORT_HPP

#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cllr/refinement.hpp"
#include "cllr/semantics.hpp"
#include "cllr/syntax.hpp"

namespace cllr {

using json = nlohmann::json;

/// Reachable part of the graph. Ids are renumbered densely in BFS order from
/// the root, so output does not depend on how the universe was explored.
inline json lts_to_json(const Lts &lts) {
  std::map<StateId, std::size_t> ids;
  for (StateId s : lts.states)
    ids.emplace(s, ids.size());
  json states = json::array();
  json transitions = json::array();
  for (StateId s : lts.states) {
    states.push_back({{"id", ids.at(s)},
                      {"term", print(lts.universe[s])},
                      {"stable", lts.stable(s)},
                      {"inconsistent", lts.in_f(s)}});
    for (const auto &e : lts.out[s])
      transitions.push_back({{"src", ids.at(s)}, {"label", e.label.label()}, {"dst", ids.at(e.dst)}});
  }
  return json{{"root", ids.at(lts.root())}, {"states", states}, {"transitions", transitions}};
}

namespace detail {

inline std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace detail

/// Graphviz rendering: inconsistent states double circles, tau edges dashed,
/// the root marked by an arrow from an invisible node.
inline std::string lts_to_dot(const Lts &lts) {
  std::map<StateId, std::size_t> ids;
  for (StateId s : lts.states)
    ids.emplace(s, ids.size());
  std::ostringstream os;
  os << "digraph lts {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  init [shape=point, style=invis];\n";
  for (StateId s : lts.states) {
    os << "  s" << ids.at(s) << " [label=\"" << detail::dot_escape(print(lts.universe[s])) << "\"";
    if (lts.in_f(s))
      os << ", shape=doublecircle";
    os << "];\n";
  }
  os << "  init -> s" << ids.at(lts.root()) << ";\n";
  for (StateId s : lts.states)
    for (const auto &e : lts.out[s]) {
      os << "  s" << ids.at(s) << " -> s" << ids.at(e.dst) << " [label=\"" << e.label.label() << "\"";
      if (e.label.is_tau())
        os << ", style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string lts_to_text(const Lts &lts) {
  std::map<StateId, std::size_t> ids;
  for (StateId s : lts.states)
    ids.emplace(s, ids.size());
  std::ostringstream os;
  for (StateId s : lts.states) {
    os << 's' << ids.at(s) << (s == lts.root() ? " (root)" : "") << (lts.in_f(s) ? " [F]" : "")
       << (lts.stable(s) ? " [stable]" : "") << ": " << print(lts.universe[s]) << '\n';
    for (const auto &e : lts.out[s])
      os << "  --" << e.label.label() << "--> s" << ids.at(e.dst) << '\n';
  }
  return os.str();
}

inline json verdict_to_json(const RefinementVerdict &v) {
  const Lts &lts = *v.lts;
  json j;
  j["holds"] = v.holds;
  json pairs = json::array();
  if (v.witness)
    for (const auto &[p, q] : v.witness->pairs)
      pairs.push_back(json::array({print(lts.universe[p]), print(lts.universe[q])}));
  j["witness_pairs"] = pairs;
  if (v.counterexample) {
    json path = json::array();
    for (const auto &st : v.counterexample->path)
      path.push_back({{"action", st.action.label()}, {"state", print(lts.universe[st.state])}});
    json cx{{"path", path}, {"reason", to_string(v.counterexample->reason)}};
    if (v.counterexample->against)
      cx["against"] = print(lts.universe[*v.counterexample->against]);
    j["counterexample"] = cx;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline std::string verdict_to_text(const RefinementVerdict &v) {
  std::ostringstream os;
  os << (v.holds ? "holds" : "refuted") << '\n';
  if (v.counterexample) {
    const Lts &lts = *v.lts;
    os << "counterexample (" << to_string(v.counterexample->reason) << "):\n";
    os << "  start " << print(lts.universe[v.left]) << '\n';
    for (const auto &st : v.counterexample->path)
      os << "  --" << st.action.label() << "--> " << print(lts.universe[st.state]) << '\n';
    if (v.counterexample->against)
      os << "  unmatched by " << print(lts.universe[*v.counterexample->against]) << '\n';
  }
  return os.str();
}

inline json validation_to_json(const Lts &lts, const ValidationReport &r) {
  json cx = json::array();
  for (const auto &[s, what] : r.counterexamples)
    cx.push_back({{"state", print(lts.universe[s])}, {"property", what}});
  return json{{"tau_pure", r.tau_pure},
              {"lts1", r.lts1},
              {"lts2", r.lts2},
              {"forward_tau_F", r.forward_tau_f},
              {"counterexamples", cx}};
}

} // namespace cllr

#endif // CLLR_EXPORT_HPP
