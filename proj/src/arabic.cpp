#include "irth/arabic.hpp"

#include <sstream>

namespace irth {

namespace {

const std::string kTatweel = "ـ";
const std::string kAlefMaqsura = "ى";
const std::string kYa = "ي";

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string strip_tatweel(const std::string& s) {
    return replace_all(s, kTatweel, "");
}

std::string fold_ya(const std::string& s) {
    return replace_all(s, kAlefMaqsura, kYa);
}

std::string trim(const std::string& s) {
    // NBSP (U+00A0) shows up in copied Arabic text; treat it as space too.
    std::string t = replace_all(s, " ", " ");
    size_t b = 0, e = t.size();
    while (b < e && is_space_byte(t[b])) ++b;
    while (e > b && is_space_byte(t[e - 1])) --e;
    return t.substr(b, e - b);
}

std::string squeeze_spaces(const std::string& s) {
    std::string t = trim(s);
    std::string out;
    bool in_space = false;
    for (unsigned char c : t) {
        if (is_space_byte(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += static_cast<char>(c);
        }
    }
    return out;
}

std::string match_key(const std::string& s) {
    return squeeze_spaces(fold_ya(strip_tatweel(s)));
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(squeeze_spaces(s));
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace irth
