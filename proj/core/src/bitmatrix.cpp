#include "flipsym/bitmatrix.hpp"

namespace flipsym {

std::string to_string(BitMatrix m) {
    std::string out;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j)
            out += m.get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string to_string(const RankOneTensor& t) {
    std::string out;
    for (int i = 0; i < t.dim(); ++i) {
        for (int j = 0; j < t.dim(); ++j)
            out += t.a.get(i, j) ? '1' : '0';
        out += "  ";
        for (int j = 0; j < t.dim(); ++j)
            out += t.b.get(i, j) ? '1' : '0';
        out += "  ";
        for (int j = 0; j < t.dim(); ++j)
            out += t.c.get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace flipsym
