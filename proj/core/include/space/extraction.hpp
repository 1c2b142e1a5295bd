#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "space/hierarchy.hpp"
#include "space/text.hpp"

namespace space {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Phase { Positive, Negative };  // H / L
enum class Source { Predicted, Reference };

// Term lists for one phenomenon (pressure, temperature, ...).
struct PhenomenonConfig {
  std::string name;
  std::vector<std::string> positive_terms;
  std::vector<std::string> negative_terms;
  // Longer phrases whose presence suppresses a contained term, e.g.
  // "shortwave trough" suppresses "trough".
  std::vector<std::string> exclusion_patterns;

  // Parses `H|phrase`, `L|phrase`, `exclude|phrase`, `name|...` lines.
  static PhenomenonConfig load(std::string_view definition_text);
  void validate() const;
};

// One phase-tagged term occurrence bound to the locations that follow it
// in its sentence (or to the home station when none do).
struct PhenomenonObject {
  Phase phase = Phase::Positive;
  std::string term;
  std::vector<std::string> locations;  // node ids, document order, deduped
  int sentence_index = 0;
  Span char_span;
  Source source = Source::Predicted;
};

// Sentence boundaries over a discussion. Splits on '.', '!', '?', blank
// lines, and AFD section-break lines; decimal points, compass-point
// abbreviations, and unit abbreviations do not split.
std::vector<Span> segment_sentences(std::string_view text);

std::vector<PhenomenonObject> extract_objects(std::string_view text,
                                              const PhenomenonConfig& config,
                                              const LocationHierarchy& hierarchy,
                                              const std::string& station,
                                              Source source);

}  // namespace space
