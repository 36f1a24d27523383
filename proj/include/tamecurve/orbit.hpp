// Graded orbit algebras of the tame bimodules: three-generator degree-2
// presentations, length-lex normal-form rewriting certified against the
// ladder Hom dimensions, centre computation, relation derivation by
// morphism composition, function-field presentations, and the finite
// (2,2) skew polynomial algebras K[X; Y, alpha].
#pragma once

#include "tamecurve/ladder.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tamecurve {

// Words over the generator letters ('X' < 'Y' < 'Z'; 'U', 'V' for the
// dehomogenized function-field displays), ordered length-then-lex.
struct WordLengthLex {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Noncommutative polynomial: sorted term map, zero coefficients pruned.
struct NCPoly {
    Field k;
    std::map<std::string, Scalar, WordLengthLex> terms;

    bool operator==(const NCPoly& o) const { return terms == o.terms; }
};

NCPoly nc_zero(const Field& k);
NCPoly nc_term(const Field& k, const std::string& word, const Scalar& c);
NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_sub(const NCPoly& a, const NCPoly& b);
NCPoly nc_neg(const NCPoly& a);
NCPoly nc_scale(const Scalar& c, const NCPoly& a);
// Free concatenation product, no reduction.
NCPoly nc_concat(const NCPoly& a, const NCPoly& b);
bool nc_is_zero(const NCPoly& a);
// Leading term first; letter runs collapse to exponents ("Z^2 + 2*X*Y").
std::string nc_to_string(const NCPoly& a);

// Three degree-1 generators X, Y, Z and four homogeneous degree-2
// relations whose leading words are exactly YX, ZX, ZY, ZZ.
struct GradedPresentation {
    Field k;
    std::vector<std::string> generators; // {"X", "Y", "Z"}
    std::vector<NCPoly> relations;
};

// The presented orbit algebra of a (1,4) shape: comm_ext in the
// x^2 = c0, y^2 = a0 + a1 x form, skew_ext, or quat_char2.
// Throws UnsupportedShape for towers with linear terms.
GradedPresentation presentation_for(const AlgebraRef& F);
// Presentation from explicit relations (automorphism-twisted products);
// validates homogeneity and the leading-word set.
GradedPresentation presentation_from_relations(const Field& k, std::vector<NCPoly> rels);

// Rewrite rules oriented from the relations by leading term. Rewriting
// always shrinks words in length-lex order, so it terminates; the step
// bound is a guard that turns a broken orientation into NonTerminating
// instead of a hang.
struct NormalFormTable {
    GradedPresentation pres;
    std::map<std::string, NCPoly> rules; // 2-letter word -> lower replacement
    size_t step_bound;
};
NormalFormTable make_normal_form_table(GradedPresentation pres, size_t step_bound = 1000000);

NCPoly normal_form(const NormalFormTable& t, const NCPoly& a);
NCPoly multiply(const NormalFormTable& t, const NCPoly& a, const NCPoly& b);
bool is_commutative(const NormalFormTable& t);

// Irreducible monomials of degree n in ascending order; their count.
std::vector<std::string> basis_words(const NormalFormTable& t, size_t n);
size_t dim_degree(const NormalFormTable& t, size_t n);
// Coordinates of a reduced polynomial in a degree basis (one column).
SMat nc_coords(const NormalFormTable& t, const NCPoly& a, const std::vector<std::string>& basis);
// k-basis of the central elements of degree n (commute with X, Y, Z).
std::vector<NCPoly> centre_basis(const NormalFormTable& t, size_t n);

// Dimension certification of the rewriting basis against the ladder:
// dim_degree(t) must equal dim_k Hom(P_1, P_{1+t}) for 1 <= t <= max_deg.
// Throws PresentationMismatch on divergence.
void certify_dimensions(const NormalFormTable& t, Ladder& lad, size_t max_deg = 4);

// Degree-2 relations recomputed as the kernel of the composition map
// (the nine step composites P_1 -> P_3 against the 5-dimensional Hom);
// asserts the kernel equals the presented span.
struct LadderPresentationReport {
    GradedPresentation presentation;
    size_t kernel_dim = 0; // 9 - dim Hom(P_1, P_3) = 4
    SMat kernel;           // 9 x kernel_dim, rows ordered by word XX..ZZ
};
LadderPresentationReport derive_relations_from_ladder(Ladder& lad);

// Dehomogenized description of the function field k(X), its centre, and
// the skewness index s.
struct FunctionFieldPresentation {
    std::string field;
    std::string centre;
    uint64_t s = 1;
    bool commutative = false;
};
FunctionFieldPresentation function_field_presentation(const AlgebraRef& F);

// Finite (2,2) data: K = F_{q^n} over k = F_q = F_{p^e}, alpha the
// q-Frobenius power x -> x^{q^frob} with gcd(frob, n) = 1.
struct SkewPolyAlgebra {
    Field K;
    uint64_t p = 0;
    size_t e = 1, n = 1, frob = 1;
};
SkewPolyAlgebra make_skew_poly(uint64_t p, size_t e, size_t n, size_t frob = 1);
Scalar skew_alpha(const SkewPolyAlgebra& S, const Scalar& c);

// Element of K[X; Y, alpha]: K-coefficients of the monomials X^i Y^j.
struct SkewElem {
    std::map<std::pair<size_t, size_t>, Scalar> terms;

    bool operator==(const SkewElem& o) const { return terms == o.terms; }
};
SkewElem skew_term(const SkewPolyAlgebra& S, size_t i, size_t j, const Scalar& c);
SkewElem skew_add(const SkewPolyAlgebra& S, const SkewElem& a, const SkewElem& b);
SkewElem skew_multiply(const SkewPolyAlgebra& S, const SkewElem& a, const SkewElem& b);
bool skew_is_zero(const SkewElem& a);
std::string skew_to_string(const SkewPolyAlgebra& S, const SkewElem& a);

// dim over k of the degree-d component K<X^i Y^j : i+j = d>.
size_t skew_dim_degree(const SkewPolyAlgebra& S, size_t d);
// k-basis of the degree-d centre: verifies each returned monomial
// commutes with Y and with K, and that the kernel of the commutator
// system over the prime field has exactly the matching dimension.
std::vector<SkewElem> skew_centre_basis(const SkewPolyAlgebra& S, size_t d);
FunctionFieldPresentation function_field_presentation(const SkewPolyAlgebra& S);

} // namespace tamecurve
