#include "flipsym/lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipsym {

namespace {

uint64_t order_mask(int order) {
    return order >= 64 ? ~uint64_t(0) : (uint64_t(1) << order) - 1;
}

bool c3_invariant(const RankOneTensor& t) {
    return t.a == t.b && t.b == t.c;
}

}  // namespace

LiftState lift_state_from(const Scheme& s) {
    if (s.group != Group::C3 && s.group != Group::C3xZ2)
        throw std::invalid_argument("lifting requires a C3- or C3xZ2-invariant scheme");
    if (!verify_f2(s))
        throw std::invalid_argument("lifting requires a scheme that verifies over F2");

    LiftState st;
    st.n = s.n;
    st.m = 1;
    st.partition = s.partition;
    for (const auto& t : s.fixed) {
        if (!c3_invariant(t))
            throw std::invalid_argument("fixed tensor is not C3-invariant");
        st.fixed.push_back(to_int(t));
    }

    std::vector<RankOneTensor> reps;
    for (const auto& rep : s.orbits) {
        reps.push_back(rep);
        if (s.group == Group::C3xZ2)
            reps.push_back(act(GroupElement{0, 1}, rep));
    }
    st.k = int(reps.size());

    const int nn = s.n * s.n;
    st.coeffs.assign(st.variables(), 0);
    for (int l = 0; l < st.k; ++l) {
        const BitMatrix* fam[3] = {&reps[l].a, &reps[l].b, &reps[l].c};
        if (!has_full_orbit(reps[l], Group::C3))
            throw std::invalid_argument("orbit representative is C3-invariant; cannot lift");
        for (int f = 0; f < 3; ++f)
            for (int cell = 0; cell < nn; ++cell)
                st.coeffs[std::size_t(l * 3 + f) * nn + cell] = (fam[f]->bits >> cell) & 1;
    }
    return st;
}

std::vector<uint64_t> brent_residual(const LiftState& st, int order) {
    const int n = st.n;
    const int nn = n * n;
    const uint64_t mask = order_mask(order);
    std::vector<uint64_t> res(std::size_t(nn) * nn * nn, 0);

    for (int l = 0; l < st.k; ++l) {
        const uint64_t* alpha = st.coeffs.data() + std::size_t(l * 3 + 0) * nn;
        const uint64_t* beta = st.coeffs.data() + std::size_t(l * 3 + 1) * nn;
        const uint64_t* gamma = st.coeffs.data() + std::size_t(l * 3 + 2) * nn;
        for (int x = 0; x < nn; ++x) {
            for (int y = 0; y < nn; ++y) {
                // term1: a[x] b[y] c[z]; term2: a[y] b[z] c[x]; term3: a[z] b[x] c[y]
                const uint64_t t1 = alpha[x] * beta[y];
                const uint64_t t2a = alpha[y];
                const uint64_t t3b = beta[x];
                uint64_t* out = res.data() + (std::size_t(x) * nn + y) * nn;
                for (int z = 0; z < nn; ++z)
                    out[z] += t1 * gamma[z] + t2a * beta[z] * gamma[x] + alpha[z] * t3b * gamma[y];
            }
        }
    }

    // Subtract the target: multiplication tensor entries minus the fixed
    // tensors.  Two's-complement wraparound is exact mod 2^order.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k2 = 0; k2 < n; ++k2)
                res[(std::size_t(i * n + j) * nn + (j * n + k2)) * nn + (k2 * n + i)] -= 1;
    for (const auto& t : st.fixed) {
        for (int x = 0; x < nn; ++x) {
            const uint64_t av = uint64_t(t.a.v[x]);
            if (!av)
                continue;
            for (int y = 0; y < nn; ++y) {
                const uint64_t bv = uint64_t(t.b.v[y]);
                if (!bv)
                    continue;
                uint64_t* out = res.data() + (std::size_t(x) * nn + y) * nn;
                for (int z = 0; z < nn; ++z)
                    out[z] += av * bv * uint64_t(t.c.v[z]);
            }
        }
    }

    for (auto& v : res)
        v &= mask;
    return res;
}

Gf2Matrix brent_jacobian(const LiftState& st) {
    const int nn = st.n * st.n;
    const std::size_t equations = std::size_t(nn) * nn * nn;
    Gf2Matrix jac(equations, st.variables());

    for (int l = 0; l < st.k; ++l) {
        const uint64_t* alpha = st.coeffs.data() + std::size_t(l * 3 + 0) * nn;
        const uint64_t* beta = st.coeffs.data() + std::size_t(l * 3 + 1) * nn;
        const uint64_t* gamma = st.coeffs.data() + std::size_t(l * 3 + 2) * nn;
        const std::size_t va = std::size_t(l * 3 + 0) * nn;
        const std::size_t vb = std::size_t(l * 3 + 1) * nn;
        const std::size_t vc = std::size_t(l * 3 + 2) * nn;
        for (int x = 0; x < nn; ++x) {
            for (int y = 0; y < nn; ++y) {
                const std::size_t row_base = (std::size_t(x) * nn + y) * nn;
                for (int z = 0; z < nn; ++z) {
                    const std::size_t q = row_base + z;
                    // term1 = a[x] b[y] c[z]
                    if (beta[y] & gamma[z] & 1)
                        jac.toggle(q, va + x);
                    if (alpha[x] & gamma[z] & 1)
                        jac.toggle(q, vb + y);
                    if (alpha[x] & beta[y] & 1)
                        jac.toggle(q, vc + z);
                    // term2 = a[y] b[z] c[x]
                    if (beta[z] & gamma[x] & 1)
                        jac.toggle(q, va + y);
                    if (alpha[y] & gamma[x] & 1)
                        jac.toggle(q, vb + z);
                    if (alpha[y] & beta[z] & 1)
                        jac.toggle(q, vc + x);
                    // term3 = a[z] b[x] c[y]
                    if (beta[x] & gamma[y] & 1)
                        jac.toggle(q, va + z);
                    if (alpha[z] & gamma[y] & 1)
                        jac.toggle(q, vb + x);
                    if (alpha[z] & beta[x] & 1)
                        jac.toggle(q, vc + y);
                }
            }
        }
    }
    return jac;
}

std::optional<LiftState> hensel_step(const LiftState& st, const HenselOptions& options) {
    for (uint64_t v : brent_residual(st, st.m))
        if (v)
            throw std::invalid_argument("hensel_step: residual does not vanish at the current order");

    const std::vector<uint64_t> res = brent_residual(st, st.m + 1);
    BitVec rhs(res.size());
    for (std::size_t q = 0; q < res.size(); ++q)
        if ((res[q] >> st.m) & 1)
            rhs.set(q, true);

    Gf2Matrix local;
    const Gf2Matrix* jac = options.jacobian;
    if (!jac) {
        local = brent_jacobian(st);
        jac = &local;
    }
    auto sol = gf2_solve(*jac, rhs);
    if (!sol)
        return std::nullopt;

    BitVec y = sol->particular;
    if (options.rng)
        for (const auto& basis : sol->nullspace)
            if (options.rng->below(2))
                y ^= basis;

    LiftState next = st;
    next.m = st.m + 1;
    const uint64_t inc = uint64_t(1) << st.m;
    for (std::size_t v = 0; v < next.coeffs.size(); ++v)
        if (y.get(v))
            next.coeffs[v] += inc;
    return next;
}

IntScheme balanced_scheme(const LiftState& st) {
    const int nn = st.n * st.n;
    const int64_t half = int64_t(1) << (st.m - 1);
    const int64_t full = int64_t(1) << st.m;
    auto balanced = [&](uint64_t v) -> int64_t {
        const int64_t x = int64_t(v);
        return x >= half ? x - full : x;
    };

    IntScheme out;
    out.n = st.n;
    out.group = Group::C3;
    out.partition = st.partition;
    out.fixed = st.fixed;
    for (int l = 0; l < st.k; ++l) {
        IntRankOneTensor t{IntMatrix(st.n), IntMatrix(st.n), IntMatrix(st.n)};
        IntMatrix* fam[3] = {&t.a, &t.b, &t.c};
        for (int f = 0; f < 3; ++f)
            for (int cell = 0; cell < nn; ++cell)
                fam[f]->v[cell] = balanced(st.coeffs[std::size_t(l * 3 + f) * nn + cell]);
        out.orbits.push_back(std::move(t));
    }
    return out;
}

LiftResult lift(const Scheme& s, const LiftOptions& options) {
    LiftOptions opt = options;
    opt.max_order = std::clamp(opt.max_order, 2, 18);
    opt.attempts = std::max(1, opt.attempts);

    const LiftState init = lift_state_from(s);
    const Gf2Matrix jacobian = brent_jacobian(init);

    LiftResult result;
    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
        Xoshiro256 rng(mix64(opt.seed) ^ uint64_t(attempt));
        LiftState st = init;
        bool lifted = false;
        while (true) {
            IntScheme candidate = balanced_scheme(st);
            if (verify_int(candidate)) {
                result.scheme = std::move(candidate);
                lifted = true;
                break;
            }
            if (st.m >= opt.max_order)
                break;
            HenselOptions ho;
            ho.jacobian = &jacobian;
            ho.rng = attempt > 0 ? &rng : nullptr;
            auto next = hensel_step(st, ho);
            if (!next)
                break;
            st = std::move(*next);
        }
        result.log.push_back({attempt, st.m, lifted});
        result.max_order_reached = std::max(result.max_order_reached, st.m);
        if (lifted)
            break;
    }
    return result;
}

}  // namespace flipsym
