#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "space/extraction.hpp"
#include "space/hierarchy.hpp"

namespace space {

class ScoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connected component of same-source objects under pairwise
// location-relatedness.
struct ObjectGroup {
  Source source = Source::Predicted;
  std::vector<PhenomenonObject> members;
};

// Eq.-level match counts. m_* count matched objects per phase per side;
// n_* count all objects in both texts per phase.
struct MatchTally {
  int m_pred_L = 0;
  int m_pred_H = 0;
  int m_ref_L = 0;
  int m_ref_H = 0;
  int n_L = 0;
  int n_H = 0;
};

enum class ScoreMode { Local, Aggregate };

struct SpaceScore {
  double match_score = 0.0;     // s_m
  double coverage_ratio = 0.0;  // r_c
  double score = 0.0;           // s = s_m * r_c
  ScoreMode mode = ScoreMode::Local;
  std::string phenomenon;
  // False when both texts contain zero objects; such samples are
  // excluded from corpus means.
  bool defined = true;
  MatchTally tally;
};

// Partition into connected components under "some location in a is
// related to some location in b". Groups ordered by lowest member
// (sentence index, then char offset); members in document order.
std::vector<ObjectGroup> group_objects(const std::vector<PhenomenonObject>& objects,
                                       const LocationHierarchy& hierarchy);

// Many-to-many group matching with at-most-once object counting: an
// object is matched iff it participates in at least one cross-source
// pair with equal phase and related locations.
MatchTally match_groups(const std::vector<ObjectGroup>& pred_groups,
                        const std::vector<ObjectGroup>& ref_groups,
                        const LocationHierarchy& hierarchy);

// 1 - |pred L-fraction - ref L-fraction| over matched objects; 0 when
// either side has no matches.
double match_score(const MatchTally& t);

// Matched objects over all objects. Throws when n_L + n_H == 0.
double coverage_ratio(const MatchTally& t);

SpaceScore space_local(std::string_view pred_text, std::string_view ref_text,
                       const std::string& station,
                       const PhenomenonConfig& config,
                       const LocationHierarchy& hierarchy);

// Pools objects from all of a forecast's discussions per side, then
// groups, matches, and scores exactly as local.
SpaceScore space_aggregate(
    const std::vector<std::pair<std::string, std::string>>& pred_texts,
    const std::vector<std::pair<std::string, std::string>>& ref_texts,
    const PhenomenonConfig& config, const LocationHierarchy& hierarchy);

// Scores pre-extracted object sets; the shared tail of local and
// aggregate scoring.
SpaceScore score_objects(const std::vector<PhenomenonObject>& pred_objects,
                         const std::vector<PhenomenonObject>& ref_objects,
                         const PhenomenonConfig& config,
                         const LocationHierarchy& hierarchy, ScoreMode mode);

}  // namespace space
