#include "flipsym/int_scheme.hpp"

namespace flipsym {

IntMatrix reverse(const IntMatrix& m) {
    IntMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.at(m.n - 1 - i, m.n - 1 - j) = m.at(i, j);
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

IntMatrix to_int(BitMatrix m) {
    IntMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.at(i, j) = m.get(i, j) ? 1 : 0;
    return out;
}

BitMatrix mod2(const IntMatrix& m) {
    BitMatrix out = BitMatrix::zero(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.set(i, j, (m.at(i, j) & 1) != 0);
    return out;
}

IntRankOneTensor act(GroupElement g, const IntRankOneTensor& t) {
    IntMatrix f[3] = {t.a, t.b, t.c};
    if (g.mir)
        for (auto& m : f)
            m = reverse(m);
    return IntRankOneTensor{f[(3 - g.rot) % 3], f[(4 - g.rot) % 3], f[(5 - g.rot) % 3]};
}

IntRankOneTensor to_int(const RankOneTensor& t) {
    return IntRankOneTensor{to_int(t.a), to_int(t.b), to_int(t.c)};
}

RankOneTensor mod2(const IntRankOneTensor& t) {
    return RankOneTensor(mod2(t.a), mod2(t.b), mod2(t.c));
}

IntScheme to_int(const Scheme& s) {
    IntScheme out;
    out.n = s.n;
    out.group = s.group;
    out.partition = s.partition;
    for (const auto& t : s.fixed)
        out.fixed.push_back(to_int(t));
    for (const auto& t : s.orbits)
        out.orbits.push_back(to_int(t));
    return out;
}

Scheme mod2(const IntScheme& s) {
    Scheme out;
    out.n = s.n;
    out.group = s.group;
    out.partition = s.partition;
    for (const auto& t : s.fixed)
        out.fixed.push_back(mod2(t));
    for (const auto& t : s.orbits)
        out.orbits.push_back(mod2(t));
    return out;
}

std::vector<IntRankOneTensor> expand(const IntScheme& s) {
    std::vector<IntRankOneTensor> out;
    out.reserve(s.rank());
    for (const auto& t : s.fixed)
        out.push_back(t);
    const int order = group_order(s.group);
    for (const auto& rep : s.orbits)
        for (int id = 0; id < order; ++id)
            out.push_back(act(GroupElement::from_id(id), rep));
    return out;
}

bool verify_int(const IntScheme& s) {
    const int n = s.n;
    const int nn = n * n;
    std::vector<int64_t> acc(std::size_t(nn) * nn * nn, 0);
    for (const auto& t : expand(s)) {
        for (int x = 0; x < nn; ++x) {
            const int64_t av = t.a.v[x];
            if (!av)
                continue;
            for (int y = 0; y < nn; ++y) {
                const int64_t bv = t.b.v[y];
                if (!bv)
                    continue;
                const std::size_t base = (std::size_t(x) * nn + y) * nn;
                for (int z = 0; z < nn; ++z)
                    acc[base + z] += av * bv * t.c.v[z];
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                acc[(std::size_t(i * n + j) * nn + (j * n + k)) * nn + (k * n + i)] -= 1;
    for (int64_t x : acc)
        if (x)
            return false;
    return true;
}

}  // namespace flipsym
