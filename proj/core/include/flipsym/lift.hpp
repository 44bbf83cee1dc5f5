#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipsym/gf2_solve.hpp"
#include "flipsym/int_scheme.hpp"
#include "flipsym/rng.hpp"
#include "flipsym/scheme.hpp"

namespace flipsym {

// Order-m approximation of an integer solution of the cyclic equations:
// one alpha/beta/gamma coefficient table per C3-orbit representative, each
// entry a residue mod 2^m, plus the invariant tensors held as exact
// integer constants.  Variable layout: (orbit*3 + family)*n^2 + cell with
// family 0=alpha, 1=beta, 2=gamma.
struct LiftState {
    int n = 0;
    int m = 1;  // residual vanishes mod 2^m
    int k = 0;  // C3-orbit representatives
    std::vector<IntRankOneTensor> fixed;
    std::vector<uint64_t> coeffs;  // 3*k*n^2 residues, each < 2^m
    std::optional<DiagonalPartition> partition;

    std::size_t variables() const { return std::size_t(3) * k * n * n; }
};

// Regroups a C3- or C3xZ2-invariant scheme into C3-orbit representatives
// (a C3xZ2 orbit splits into the representative and its mirror image) and
// seeds the coefficients with the F2 bits at order m=1.  The fixed tensors
// must be C3-invariant; they enter the equations as constants.
LiftState lift_state_from(const Scheme& s);

// For each index tuple: the cyclic sum over all representatives of
// alpha*beta*gamma products minus the target (the multiplication tensor
// less the fixed tensors), reduced mod 2^order.
std::vector<uint64_t> brent_residual(const LiftState& st, int order);

// Jacobian of the cyclic polynomials mod 2.  Depends only on the
// coefficients mod 2, so it is constant along a lift.
Gf2Matrix brent_jacobian(const LiftState& st);

struct HenselOptions {
    const Gf2Matrix* jacobian = nullptr;  // reuse across steps when supplied
    Xoshiro256* rng = nullptr;            // adds a random nullspace offset when set
};

// Refines an order-m state to order m+1 through the ansatz x + 2^m y,
// solving Jacobian * y = residual/2^m over F2.  Returns nullopt when the
// linear system is infeasible, which proves that this x admits no
// order-(m+1) refinement.
std::optional<LiftState> hensel_step(const LiftState& st, const HenselOptions& options = {});

// Interprets every coefficient as the balanced integer in
// [-2^{m-1}, 2^{m-1}) and assembles the C3-invariant integer scheme.
IntScheme balanced_scheme(const LiftState& st);

struct LiftOptions {
    int max_order = 16;  // clamped to [2, 18]
    int attempts = 8;
    uint64_t seed = 1;
};

struct LiftAttemptLog {
    int attempt = 0;
    int order_reached = 0;
    bool lifted = false;
};

struct LiftResult {
    std::optional<IntScheme> scheme;
    std::vector<LiftAttemptLog> log;
    int max_order_reached = 0;
};

// Iterates hensel_step, testing the balanced interpretation after every
// order; on an infeasible system retries with random nullspace offsets at
// earlier orders, up to `attempts` times.
LiftResult lift(const Scheme& s, const LiftOptions& options = {});

}  // namespace flipsym
