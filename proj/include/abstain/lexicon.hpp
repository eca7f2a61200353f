#pragma once

#include <string>
#include <vector>

namespace abstain {

// Phrase list loaded from a UTF-8 file, one phrase per line, '#' comments.
// Phrases are lowercased on load; duplicates are dropped. For hedge
// counting the list is kept sorted longest-first so multi-word phrases win
// over their sub-phrases.
struct Lexicon {
    std::vector<std::string> phrases;
    std::string source_path;

    bool empty() const { return phrases.empty(); }
};

Lexicon load_lexicon(const std::string& path, bool longest_first);

Lexicon make_lexicon(std::vector<std::string> phrases, bool longest_first);

// Built-in defaults, identical to the bundled data/ files.
const Lexicon& default_hedge_lexicon();
const Lexicon& default_refusal_lexicon();

using HedgeLexicon = Lexicon;
using RefusalLexicon = Lexicon;

}  // namespace abstain
