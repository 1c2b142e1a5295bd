#include "space/hierarchy.hpp"

#include <algorithm>
#include <sstream>

#include "space/text.hpp"

namespace space {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw HierarchyError("hierarchy line " + std::to_string(line) + ": " + msg);
}

int scale_rank(Scale s) {
  switch (s) {
    case Scale::Large: return 2;
    case Scale::Medium: return 1;
    case Scale::Small: return 0;
  }
  return 0;
}

}  // namespace

LocationHierarchy LocationHierarchy::load(std::string_view definition_text) {
  LocationHierarchy h;
  std::istringstream in{std::string(definition_text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields = split(t, '|');
    if (fields.size() != 6) fail(lineno, "expected 6 '|'-separated fields");

    LocationNode node;
    node.id = trim(fields[0]);
    if (node.id.empty()) fail(lineno, "empty id");
    std::string scale = trim(fields[1]);
    if (scale == "L") node.scale = Scale::Large;
    else if (scale == "M") node.scale = Scale::Medium;
    else if (scale == "S") node.scale = Scale::Small;
    else fail(lineno, "scale must be L, M, or S, got '" + scale + "'");
    node.canonical_name = trim(fields[2]);
    for (std::string& p : split(fields[3], ',')) {
      std::string id = trim(p);
      if (!id.empty()) node.parents.push_back(std::move(id));
    }
    for (std::string& a : split(fields[4], ',')) {
      std::string alias = trim(a);
      if (!alias.empty()) node.aliases.push_back(std::move(alias));
    }
    std::string stop = trim(fields[5]);
    if (stop == "1") node.stop = true;
    else if (stop != "0") fail(lineno, "stop flag must be 0 or 1");

    if (h.nodes_.count(node.id)) fail(lineno, "duplicate node id '" + node.id + "'");
    for (const std::string& alias : node.aliases) {
      std::string key = fold(alias);
      auto [it, inserted] = h.alias_index_.emplace(key, node.id);
      if (!inserted) {
        fail(lineno, "alias '" + alias + "' already declared on node '" +
                         it->second + "'");
      }
    }
    if (node.stop) h.stop_set_.insert(node.id);
    h.nodes_.emplace(node.id, std::move(node));
  }

  // Validate parent edges.
  for (const auto& [id, node] : h.nodes_) {
    for (const std::string& parent : node.parents) {
      auto it = h.nodes_.find(parent);
      if (it == h.nodes_.end()) {
        throw HierarchyError("node '" + id + "' references unknown parent '" +
                             parent + "'");
      }
      if (scale_rank(it->second.scale) < scale_rank(node.scale)) {
        throw HierarchyError("node '" + id +
                             "' has parent of smaller scale: '" + parent + "'");
      }
    }
  }

  // Ancestry closure; detects cycles.
  for (const auto& [id, node] : h.nodes_) {
    std::unordered_set<std::string> seen{id};
    std::vector<std::string> stack{id};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      for (const std::string& parent : h.nodes_.at(cur).parents) {
        if (parent == id) {
          throw HierarchyError("cycle through node '" + id + "'");
        }
        if (seen.insert(parent).second) stack.push_back(parent);
      }
    }
    h.ancestry_.emplace(id, std::move(seen));
  }

  // Same-scale parent chains can still cycle without passing the scale
  // check above (e.g. two large nodes parenting each other).
  for (const auto& [id, anc] : h.ancestry_) {
    for (const std::string& a : anc) {
      if (a != id && h.ancestry_.at(a).count(id)) {
        throw HierarchyError("cycle between '" + id + "' and '" + a + "'");
      }
    }
  }

  h.aliases_by_length_.reserve(h.alias_index_.size());
  for (const auto& [alias, id] : h.alias_index_) {
    h.aliases_by_length_.push_back(alias);
  }
  std::sort(h.aliases_by_length_.begin(), h.aliases_by_length_.end(),
            [](const std::string& a, const std::string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return h;
}

const LocationNode& LocationHierarchy::node(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw HierarchyError("unknown node id '" + id + "'");
  return it->second;
}

std::optional<std::string> LocationHierarchy::resolve(
    std::string_view surface) const {
  auto it = alias_index_.find(fold(surface));
  if (it == alias_index_.end()) return std::nullopt;
  return it->second;
}

const std::unordered_set<std::string>& LocationHierarchy::ancestry(
    const std::string& id) const {
  auto it = ancestry_.find(id);
  if (it == ancestry_.end()) throw HierarchyError("unknown node id '" + id + "'");
  return it->second;
}

bool LocationHierarchy::related(const std::string& a,
                                const std::string& b) const {
  const auto& anc_a = ancestry(a);
  const auto& anc_b = ancestry(b);
  if (a == b) return true;
  if (anc_a.count(b) || anc_b.count(a)) return true;  // ancestor/descendant
  if (stop_set_.count(a) || stop_set_.count(b)) return false;
  for (const std::string& c : anc_a) {
    if (stop_set_.count(c)) continue;
    if (anc_b.count(c)) return true;
  }
  return false;
}

}  // namespace space
