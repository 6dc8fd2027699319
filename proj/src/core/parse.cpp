#include "reglab/core/parse.hpp"

namespace reglab {

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.find_first_not_of(" \t\n") != std::string::npos || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace reglab
