#pragma once

// Named ladders from the literature, transcribed to flat normal form.

#include "dilog/ladder.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dilog {

struct CorpusEntry {
  std::string name;      // hyphenated, e.g. "kummer-rogers-quartic"
  Ladder ladder;
  std::string source;    // attribution and original display shape
  std::string note;           // caveats about the transcription; may be empty
  std::string open_question;  // unresolved issue with the source; may be empty
  int default_digits = 60;
};

/// All entries in a fixed order. Construction is deterministic.
const std::vector<CorpusEntry>& corpus();

/// Lookup by name; '_' and '-' are interchangeable and case is ignored.
/// Throws Error(UnknownName).
const CorpusEntry& corpus_entry(std::string_view name);

}  // namespace dilog
