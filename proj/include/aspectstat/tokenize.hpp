#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aspectstat {

// Fixed tweet tokenizer shared by keyword counting and labeling:
//   1. split on ASCII whitespace
//   2. lowercase ASCII letters
//   3. drop URL tokens (http://, https://, www.)
//   4. strip leading and trailing ASCII punctuation; this also removes the
//      '#' of hashtags, '@' of mentions and '$' of cashtags. Punctuation
//      inside a word ("don't", "s&p", "u.s") is kept.
//   5. drop tokens that end up empty
// Bytes >= 0x80 are treated as word characters, so UTF-8 text passes through.
std::vector<std::string> tokenize(std::string_view text);

std::string to_lower_ascii(std::string_view text);

}  // namespace aspectstat
