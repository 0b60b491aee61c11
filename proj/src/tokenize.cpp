#include <aspectstat/tokenize.hpp>

namespace aspectstat {
namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_punct(unsigned char c) {
    return c < 0x80 && ((c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
                        (c >= '{' && c <= '~'));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) continue;

        std::string tok = to_lower_ascii(text.substr(start, i - start));
        if (starts_with(tok, "http://") || starts_with(tok, "https://") || starts_with(tok, "www.")) continue;

        std::size_t b = 0, e = tok.size();
        while (b < e && is_punct(static_cast<unsigned char>(tok[b]))) ++b;
        while (e > b && is_punct(static_cast<unsigned char>(tok[e - 1]))) --e;
        if (b == e) continue;
        tokens.push_back(tok.substr(b, e - b));
    }
    return tokens;
}

}  // namespace aspectstat
