#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace space {

class HierarchyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scale { Large, Medium, Small };

struct LocationNode {
  std::string id;
  std::string canonical_name;
  Scale scale = Scale::Large;
  std::vector<std::string> aliases;
  std::vector<std::string> parents;  // ids of equal-or-larger-scale nodes
  bool stop = false;
};

// Three-level spatial hierarchy over location mentions. Immutable after
// load; lookups are safe from any number of concurrent readers.
class LocationHierarchy {
 public:
  // Parses the line-oriented definition format:
  //   id|scale|canonical_name|parent[,parent...]|alias[,alias...]|stop
  // with '#' comments and blank lines ignored; scale in {L,M,S};
  // stop in {0,1}. Throws HierarchyError with a line number on malformed
  // records, duplicate aliases, unknown parents, scale violations, or
  // cycles.
  static LocationHierarchy load(std::string_view definition_text);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const LocationNode& node(const std::string& id) const;
  bool has_node(const std::string& id) const {
    return nodes_.count(id) != 0;
  }

  // Alias lookup after case-folding and whitespace normalization.
  std::optional<std::string> resolve(std::string_view surface) const;

  // True iff a == b, one is an ancestor of the other, or they share a
  // non-stop common ancestor and neither endpoint is a stop node.
  bool related(const std::string& a, const std::string& b) const;

  // All declared aliases, longest folded form first. Used by the
  // extraction scanner.
  const std::vector<std::string>& aliases_by_length() const {
    return aliases_by_length_;
  }

  const std::unordered_map<std::string, LocationNode>& nodes() const {
    return nodes_;
  }
  const std::unordered_set<std::string>& stop_set() const { return stop_set_; }

  // id plus all transitive ancestors of id.
  const std::unordered_set<std::string>& ancestry(const std::string& id) const;

 private:
  LocationHierarchy() = default;

  std::unordered_map<std::string, LocationNode> nodes_;
  std::unordered_map<std::string, std::string> alias_index_;  // folded -> id
  std::unordered_set<std::string> stop_set_;
  std::unordered_map<std::string, std::unordered_set<std::string>> ancestry_;
  std::vector<std::string> aliases_by_length_;
};

}  // namespace space
