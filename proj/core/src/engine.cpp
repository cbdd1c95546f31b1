#include "stripcolor/engine.hpp"

namespace stripcolor {

std::string to_string(const Color& color) {
    if (color.is_simple()) return std::to_string(color.a);
    return "(" + std::to_string(color.a) + "," + std::to_string(color.b) + "," +
           std::to_string(color.c) + ")";
}

}  // namespace stripcolor
