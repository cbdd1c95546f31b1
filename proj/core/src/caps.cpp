#include "stripcolor/caps.hpp"

#include <cstdlib>
#include <string>

#include "stripcolor/errors.hpp"

namespace stripcolor {

void apply_caps_spec(Caps& caps, const char* spec) {
    if (spec == nullptr) return;
    std::string s(spec);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInputError("caps spec item without '=': " + item);
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidInputError("caps spec value not an integer: " + item);
        }
        if (value <= 0) throw InvalidInputError("caps spec value must be positive: " + item);
        if (key == "clique")
            caps.clique = value;
        else if (key == "chromatic")
            caps.chromatic = value;
        else if (key == "ktt")
            caps.ktt = value;
        else if (key == "longest")
            caps.longest = value;
        else if (key == "extensions")
            caps.extensions = value;
        else
            throw InvalidInputError("unknown caps key: " + key);
    }
}

Caps& caps() {
    static Caps instance = [] {
        Caps c;
        apply_caps_spec(c, std::getenv("STRIPCOLOR_CAPS"));
        return c;
    }();
    return instance;
}

}  // namespace stripcolor
