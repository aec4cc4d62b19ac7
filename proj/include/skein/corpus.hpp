#pragma once

#include <span>
#include <string_view>

namespace skein {

/// A named diagram shipped with the tool. `braid` is the braid word the PD
/// code was produced from, when there is one (empty otherwise).
struct CorpusEntry {
  std::string_view name;
  std::string_view pd_text;
  int expected_com;
  std::string_view notes;
  std::string_view braid;
};

std::span<const CorpusEntry> corpus();
/// nullptr when no entry has that name.
const CorpusEntry* find_corpus_entry(std::string_view name);

}  // namespace skein
