#include "octopara/octonion.hpp"

#include <ostream>

namespace octopara {

std::ostream& operator<<(std::ostream& os, const Octonion& x) {
    os << "(";
    for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << x[i];
    return os << ")";
}

}  // namespace octopara
