#include "subbeaver/natural.hpp"

#include <stdexcept>

namespace subbeaver {

Natural parse_natural(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("not a natural number: " + text);
    }
    return Natural(text);
}

}  // namespace subbeaver
