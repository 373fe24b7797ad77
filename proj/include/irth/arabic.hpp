#pragma once

#include <string>
#include <vector>

namespace irth {

// Text-level helpers for the Arabic labels this toolkit deals with.
// Everything operates directly on UTF-8 bytes; the code points we care
// about (tatweel, alef maqsura) are two-byte sequences.

/// Removes every tatweel (U+0640) run from the string.
std::string strip_tatweel(const std::string& s);

/// Folds alef maqsura (U+0649) to ya (U+064A). Matching-level only; the
/// canonical taxonomy labels keep their original spelling.
std::string fold_ya(const std::string& s);

/// Trims ASCII whitespace plus common Unicode spaces from both ends.
std::string trim(const std::string& s);

/// Collapses internal whitespace runs to a single space after trimming.
std::string squeeze_spaces(const std::string& s);

/// strip_tatweel + fold_ya + squeeze_spaces: the matcher-level key form.
std::string match_key(const std::string& s);

/// Splits on whitespace into tokens.
std::vector<std::string> tokenize(const std::string& s);

}  // namespace irth
