// The preprojective ladder of a (1,4) bimodule: rungs P_n with structure
// matrix [I_n | bidiagonal x/y block], the morphism triples
// (X_n, Y_n, Z_n) : P_n -> P_{n+1} spanning Hom, the four degree-2 ladder
// relations, and the universal-extension certificate
// 0 -> P_n -> P_{n+1} -> S_x -> 0.
#pragma once

#include "tamecurve/reps.hpp"

#include <map>

namespace tamecurve {

struct LadderStep {
    Morphism X, Y, Z;
};

// Rungs and steps are cached by n and immutable once built; the morphism
// constructor enforces the commuting-square condition on every triple.
struct Ladder {
    AlgebraRef F;
    std::map<size_t, Rep> rungs;
    std::map<size_t, LadderStep> steps;
};

// Accepts comm_ext only in the x^2 = c0, y^2 = a0 + a1 x shape (c1 = d1
// = 0); skew_ext and quat_char2 carry their shape by construction.
// Throws UnsupportedShape otherwise.
Ladder make_ladder(const AlgebraRef& F);

// P_n, n >= 1: m = 2n-1, n rows over F.
const Rep& build_P(Ladder& lad, size_t n);
// The k-basis (X_n, Y_n, Z_n) of Hom(P_n, P_{n+1}).
const LadderStep& build_XYZ(Ladder& lad, size_t n);
// S_x = simple regular at x, the cokernel of every X_n.
Rep ladder_simple_x(const Ladder& lad);

// The four degree-2 relations among composites P_n -> P_{n+2}, checked as
// exact matrix identities:
//   commute_xy: X_{n+1} Y_n = Y_{n+1} X_n                  (all variants)
//   commute_xz: X_{n+1} Z_n = Z_{n+1} X_n                  (all variants)
//   mixed_yz:   comm_ext   Z_{n+1} Y_n + Y_{n+1} Z_n + a1 X_{n+1} X_n = 0
//               otherwise  Z_{n+1} Y_n = Y_{n+1} Z_n
//   square_z:   comm_ext   Z_{n+1} Z_n = a0 X_{n+1} X_n - c0 Y_{n+1} Y_n
//               skew_ext   Z_{n+1} Z_n = a0 X_{n+1} X_n + c0 Y_{n+1} Y_n
//               quat_char2 Z_{n+1} Z_n = a0 X_{n+1} X_n + c0 Y_{n+1} Y_n
//                                        + Y_{n+1} Z_n
struct StepRelations {
    bool commute_xy = false;
    bool commute_xz = false;
    bool mixed_yz = false;
    bool square_z = false;
    bool all() const { return commute_xy && commute_xz && mixed_yz && square_z; }
};
StepRelations verify_step_relations(Ladder& lad, size_t n);

// Certificate for 0 -> P_n --X_n--> P_{n+1} -> S_x -> 0: zero kernel,
// dimension bookkeeping, and an exhibited isomorphism coker -> S_x.
// Throws ExactnessFailure with the offending data otherwise.
struct ExactnessReport {
    KernelCokernel pieces; // kernel (zero) and cokernel of X_n
    Morphism iso;          // cokernel representation -> S_x
};
ExactnessReport verify_universal_extension(Ladder& lad, size_t n);

} // namespace tamecurve
