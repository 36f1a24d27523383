// Graded algebra automorphisms of the orbit algebra, the ghost group
// Aut0(R)/InnBar(R), and the inverse Auslander-Reiten translation as a
// composite reflection functor, compared against the tubular shift.
#pragma once

#include "tamecurve/geometry.hpp"

namespace tamecurve {

// Degree-preserving algebra automorphism of a three-generator graded
// presentation, stored as the 3x3 matrix over k whose columns are the
// degree-one images of X, Y, Z. Every constructed automorphism maps
// each relation to normal form zero.
struct GradedAutomorphism {
    SMat matrix;
    std::string description;
};

enum class AutomorphismSearch {
    exhaustive,    // finite k: all invertible 3x3 matrices, filtered
    parameterized, // infinite k: the diagonal sign family +-X, +-Y, +-Z
};

// Image of a polynomial under the matrix substitution, reduced to
// normal form.
NCPoly apply_automorphism(const NormalFormTable& t, const SMat& matrix, const NCPoly& a);

// All matrix-realized graded automorphisms of the presented algebra.
// Exhaustive search requires |k|^9 <= bound and throws
// SearchSpaceTooLarge otherwise (or for infinite k); the parameterized
// family realizes every documented class over the rationals.
std::vector<GradedAutomorphism> graded_automorphisms(const GradedPresentation& pres,
                                                     AutomorphismSearch mode,
                                                     uint64_t bound = 2000000);

// Ghost group G = Aut0(R)/InnBar(R): automorphism classes that fix
// every height-one homogeneous prime ideal, modulo the scalar twists
// phi_a (InnBar(R) = k* when R_0 = k). Coset representatives are
// normalized so their first nonzero entry is 1.
struct GhostGroupReport {
    uint64_t order = 0;
    std::string isomorphism; // "trivial", "cyclic n", "Klein four"
    std::vector<std::string> generators;
    std::vector<GradedAutomorphism> cosets; // identity first
    // All automorphism classes modulo scalars, before the prime filter;
    // for the quartic towers this count realizes Aut of the curve and
    // matches the order of the Galois group of K over k.
    uint64_t aut_classes = 0;
    std::string note;
};

// Quartic tower input. Commutative curves report the trivial group
// directly. Noncommutative towers need certified prime data: the point
// census for finite k, or the documented prime lists over infinite k
// (a1 = 0: X, Y, Z; a1 != 0, a0 = 0: X, Y^2); other infinite towers
// throw IncompletePrimeData.
GhostGroupReport ghost_group(const AlgebraRef& F);
// Finite (2,2) input: cyclic of order n, generated by the
// coefficientwise Frobenius power alpha acting on K[X; Y, alpha].
GhostGroupReport ghost_group(const SkewPolyAlgebra& S);

// Inverse Auslander-Reiten translation as the Coxeter composite of the
// two reflection functors, on representations without injective direct
// summands (throws NotDefined otherwise). Deterministic: repeated calls
// on equal representations choose identical bases, so the morphism map
// below is compatible with the object map.
Rep coxeter_tau_minus(const Rep& P);
Morphism tau_minus_morphism(const Morphism& f);

// Action of the inverse shift composed with tau^- on the step basis
// (X_1, Y_1, Z_1) of Hom(P_1, P_2), matched against the diagonal ghost
// candidates up to a global scalar, together with the relations of the
// twisted orbit algebra Pi(L, tau^-).
struct TranslationReport {
    SMat matrix;       // normalized 3x3 action, first nonzero entry 1
    std::string ghost; // "identity", "gamma_y", "gamma_z", "gamma_y gamma_z"
    GradedPresentation twisted;
};
// Throws NoMatch when the action is not one of the four diagonal ghost
// candidates (that would falsify the translation comparison).
TranslationReport compare_tau_with_shift(const AlgebraRef& F);

} // namespace tamecurve
