#include "space/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace space {

namespace {

bool objects_related(const PhenomenonObject& a, const PhenomenonObject& b,
                     const LocationHierarchy& hierarchy) {
  for (const std::string& la : a.locations) {
    for (const std::string& lb : b.locations) {
      if (hierarchy.related(la, lb)) return true;
    }
  }
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ObjectGroup> group_objects(const std::vector<PhenomenonObject>& objects,
                                       const LocationHierarchy& hierarchy) {
  const int n = static_cast<int>(objects.size());
  UnionFind uf(objects.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (objects_related(objects[i], objects[j], hierarchy)) uf.unite(i, j);
    }
  }

  // Document order within groups; groups ordered by their first member.
  std::vector<int> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (objects[a].sentence_index != objects[b].sentence_index)
      return objects[a].sentence_index < objects[b].sentence_index;
    return objects[a].char_span.begin < objects[b].char_span.begin;
  });

  std::vector<ObjectGroup> groups;
  std::vector<int> group_of(objects.size(), -1);
  for (int idx : order) {
    int root = uf.find(idx);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      ObjectGroup g;
      g.source = objects[idx].source;
      groups.push_back(std::move(g));
    }
    groups[group_of[root]].members.push_back(objects[idx]);
  }
  return groups;
}

MatchTally match_groups(const std::vector<ObjectGroup>& pred_groups,
                        const std::vector<ObjectGroup>& ref_groups,
                        const LocationHierarchy& hierarchy) {
  std::vector<const PhenomenonObject*> pred, ref;
  for (const ObjectGroup& g : pred_groups)
    for (const PhenomenonObject& o : g.members) pred.push_back(&o);
  for (const ObjectGroup& g : ref_groups)
    for (const PhenomenonObject& o : g.members) ref.push_back(&o);

  MatchTally t;
  for (const PhenomenonObject* o : pred)
    (o->phase == Phase::Negative ? t.n_L : t.n_H)++;
  for (const PhenomenonObject* o : ref)
    (o->phase == Phase::Negative ? t.n_L : t.n_H)++;

  // A satisfying (p, r) pair both forms the group match and marks each
  // endpoint matched; each object counts at most once.
  std::vector<bool> pred_matched(pred.size(), false);
  std::vector<bool> ref_matched(ref.size(), false);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (pred[i]->phase != ref[j]->phase) continue;
      if (!objects_related(*pred[i], *ref[j], hierarchy)) continue;
      pred_matched[i] = true;
      ref_matched[j] = true;
    }
  }
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!pred_matched[i]) continue;
    (pred[i]->phase == Phase::Negative ? t.m_pred_L : t.m_pred_H)++;
  }
  for (std::size_t j = 0; j < ref.size(); ++j) {
    if (!ref_matched[j]) continue;
    (ref[j]->phase == Phase::Negative ? t.m_ref_L : t.m_ref_H)++;
  }
  return t;
}

double match_score(const MatchTally& t) {
  const int pred = t.m_pred_L + t.m_pred_H;
  const int ref = t.m_ref_L + t.m_ref_H;
  if (pred == 0 || ref == 0) return 0.0;
  const double pred_frac = static_cast<double>(t.m_pred_L) / pred;
  const double ref_frac = static_cast<double>(t.m_ref_L) / ref;
  return 1.0 - std::abs(pred_frac - ref_frac);
}

double coverage_ratio(const MatchTally& t) {
  const int total = t.n_L + t.n_H;
  if (total == 0) {
    throw ScoringError("coverage ratio undefined: no objects in either text");
  }
  const int matched = t.m_pred_L + t.m_pred_H + t.m_ref_L + t.m_ref_H;
  return static_cast<double>(matched) / total;
}

SpaceScore score_objects(const std::vector<PhenomenonObject>& pred_objects,
                         const std::vector<PhenomenonObject>& ref_objects,
                         const PhenomenonConfig& config,
                         const LocationHierarchy& hierarchy, ScoreMode mode) {
  SpaceScore result;
  result.mode = mode;
  result.phenomenon = config.name;

  std::vector<ObjectGroup> pred_groups = group_objects(pred_objects, hierarchy);
  std::vector<ObjectGroup> ref_groups = group_objects(ref_objects, hierarchy);
  result.tally = match_groups(pred_groups, ref_groups, hierarchy);

  if (result.tally.n_L + result.tally.n_H == 0) {
    result.defined = false;
    return result;
  }
  result.match_score = match_score(result.tally);
  result.coverage_ratio = coverage_ratio(result.tally);
  result.score = result.match_score * result.coverage_ratio;
  return result;
}

SpaceScore space_local(std::string_view pred_text, std::string_view ref_text,
                       const std::string& station,
                       const PhenomenonConfig& config,
                       const LocationHierarchy& hierarchy) {
  std::vector<PhenomenonObject> pred =
      extract_objects(pred_text, config, hierarchy, station, Source::Predicted);
  std::vector<PhenomenonObject> ref =
      extract_objects(ref_text, config, hierarchy, station, Source::Reference);
  return score_objects(pred, ref, config, hierarchy, ScoreMode::Local);
}

SpaceScore space_aggregate(
    const std::vector<std::pair<std::string, std::string>>& pred_texts,
    const std::vector<std::pair<std::string, std::string>>& ref_texts,
    const PhenomenonConfig& config, const LocationHierarchy& hierarchy) {
  std::vector<PhenomenonObject> pred, ref;
  for (const auto& [station, text] : pred_texts) {
    for (PhenomenonObject& o :
         extract_objects(text, config, hierarchy, station, Source::Predicted)) {
      pred.push_back(std::move(o));
    }
  }
  for (const auto& [station, text] : ref_texts) {
    for (PhenomenonObject& o :
         extract_objects(text, config, hierarchy, station, Source::Reference)) {
      ref.push_back(std::move(o));
    }
  }
  return score_objects(pred, ref, config, hierarchy, ScoreMode::Aggregate);
}

}  // namespace space
