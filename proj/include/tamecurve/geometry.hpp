// Height-one points of the orbit-algebra curve: prime enumeration with
// index/multiplicity data, commutativity classification, and the search
// for an efficient tubular shift (a unirational point).
#pragma once

#include "tamecurve/orbit.hpp"

#include <optional>

namespace tamecurve {

// A height-one point: central prime generator pi, its total degree, the
// index f and multiplicity e, and the simple regular S concentrated at
// the point together with coker(pi : P_1 -> P_{1+d}) = S^e.
struct CurvePoint {
    NCPoly prime;
    size_t degree = 0;
    uint64_t f = 0, e = 0;
    std::string end_ring; // recognition string of End(S)
    Rep simple;
    Rep cokernel;
};

// All points of degree <= max_degree over a finite base field, sorted by
// degree then by the printed prime. Degree 1 is the single prime X; even
// degree d corresponds to monic irreducible polynomials of degree d/2 in
// u = Y^2/X^2; odd degrees above 1 carry no primes (X divides every
// weighted-homogeneous polynomial of odd degree). Each returned point is
// certified: the prime is central, pi is injective on P_1, and the
// cokernel bookkeeping dim C = e dim S, dim End(C) = e^2 dim End(S)
// holds exactly.
// Throws UnsupportedShape unless the tower is comm_ext, InfiniteField
// for infinite k, DegreeBoundExceeded above degree 3 (the certified
// range: higher even degrees would need a simple-module search beyond
// the (2,1) family).
std::vector<CurvePoint> enumerate_points(const AlgebraRef& F, size_t max_degree = 3);

// Evaluates a homogeneous noncommutative polynomial as a morphism
// P_1 -> P_{1+d} through the ladder steps (leftmost letter acts on the
// highest rung).
Morphism evaluate_through_ladder(Ladder& lad, const NCPoly& g);

enum class CurveVerdict { commutative, noncommutative, unknown };

// Curve-level classification: the function field, whether it is
// commutative, and whether the commutative curve is Brauer-Severi.
struct CurveDescriptor {
    CurveVerdict verdict = CurveVerdict::unknown;
    bool brauer_severi = false; // meaningful only for commutative verdicts
    FunctionFieldPresentation function_field;
    std::string note;
};

// The Kronecker bimodule k^2: the projective line over k.
CurveDescriptor classify_kronecker(const Field& k);
// (1,4) towers: quaternion variants give Brauer-Severi conics when F is
// a division algebra (UnsupportedShape when it splits, verdict unknown
// when division-ness is undecided); commutative quartics give a
// commutative curve exactly when K/k has no primitive element.
CurveDescriptor classify_commutative(const AlgebraRef& F);
// Finite (2,2) data: commutative exactly when n = 1.
CurveDescriptor classify_commutative(const SkewPolyAlgebra& S);

// Existence of an efficient tubular shift, decided through a unirational
// point (f = e = 1). The cokernel of X : P_1 -> P_2 is the simple at the
// inner quadratic subfield k(x) and is always the first candidate; over
// finite fields the point census backs it up, over infinite fields the
// remaining intermediate quadratic subfields are searched. Returns an
// explicit witness point when the verdict is yes.
struct ShiftReport {
    Tri verdict = Tri::unknown;
    std::optional<CurvePoint> witness;
    std::string note;
};
ShiftReport has_efficient_tubular_shift(const AlgebraRef& F, size_t search_bound = 1000);
// Finite (2,2) data: the base field is finite, so a unirational point
// exists; no explicit (1,4)-style witness is attached.
ShiftReport has_efficient_tubular_shift(const SkewPolyAlgebra& S);

} // namespace tamecurve
