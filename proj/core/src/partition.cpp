#include "flipsym/partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flipsym {

DiagonalPartition parse_partition(std::string_view text) {
    DiagonalPartition p;
    std::size_t i = 0;
    auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    skip_spaces();
    while (i < text.size()) {
        if (text[i] != '{')
            throw std::invalid_argument("partition: expected '{' at position " + std::to_string(i));
        ++i;
        std::vector<int> part;
        while (true) {
            skip_spaces();
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9')
                ++i;
            if (i == start)
                throw std::invalid_argument("partition: expected an index at position " +
                                            std::to_string(i));
            part.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip_spaces();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == '}') {
                ++i;
                break;
            }
            throw std::invalid_argument("partition: expected ',' or '}' at position " +
                                        std::to_string(i));
        }
        std::sort(part.begin(), part.end());
        p.parts.push_back(std::move(part));
        skip_spaces();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("partition: expected ',' between parts at position " +
                                            std::to_string(i));
            ++i;
            skip_spaces();
        }
    }
    if (p.parts.empty())
        throw std::invalid_argument("partition: empty");
    return p;
}

std::string to_string(const DiagonalPartition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            out += ',';
        out += '{';
        for (std::size_t j = 0; j < p.parts[i].size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(p.parts[i][j]);
        }
        out += '}';
    }
    return out;
}

bool validate_partition(const DiagonalPartition& p, int n, Group g, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason)
            *reason = why;
        return false;
    };
    if (n < 1 || n > kMaxDim)
        return fail("dimension must be between 1 and 8");
    std::set<int> seen;
    for (const auto& part : p.parts) {
        if (part.empty())
            return fail("empty part");
        for (int i : part) {
            if (i < 1 || i > n)
                return fail("index " + std::to_string(i) + " outside {1.." + std::to_string(n) +
                            "}");
            if (!seen.insert(i).second)
                return fail("index " + std::to_string(i) + " appears twice");
        }
    }
    if (int(seen.size()) != n)
        return fail("parts do not cover {1.." + std::to_string(n) + "}");
    if (g == Group::C3xZ2) {
        std::set<std::vector<int>> parts(p.parts.begin(), p.parts.end());
        for (const auto& part : p.parts) {
            std::vector<int> reversed;
            for (int i : part)
                reversed.push_back(n + 1 - i);
            std::sort(reversed.begin(), reversed.end());
            if (!parts.count(reversed))
                return fail("reversal of part {" + std::to_string(part.front()) +
                            ",...} is not a part (required for C3xZ2)");
        }
    }
    return true;
}

}  // namespace flipsym
