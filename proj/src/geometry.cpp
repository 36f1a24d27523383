// Point enumeration and curve classification: central prime lifts with
// their simple regular modules and (f, e) data, commutativity verdicts,
// and the unirational-point criterion for efficient tubular shifts.
#include "tamecurve/geometry.hpp"

#include <algorithm>

namespace tamecurve {

namespace {

const Morphism& step_component(const LadderStep& s, char letter) {
    switch (letter) {
    case 'X': return s.X;
    case 'Y': return s.Y;
    case 'Z': return s.Z;
    default: throw UnsupportedShape(std::string("unknown generator letter '") + letter + "'");
    }
}

// Leftmost letter acts on the highest rung: w_0 w_1 ... w_{d-1} becomes
// G_{w_0}^{(d)} o ... o G_{w_{d-1}}^{(1)} : P_1 -> P_{1+d}.
Morphism evaluate_word(Ladder& lad, const std::string& w) {
    size_t d = w.size();
    Morphism cur = step_component(build_XYZ(lad, 1), w[d - 1]);
    for (size_t j = d - 1; j-- > 0;)
        cur = compose(step_component(build_XYZ(lad, d - j), w[j]), cur);
    return cur;
}

// Every element of the quartic algebra, base coordinates enumerated with
// the x coordinate varying first so that inner-subfield candidates come
// early in the simple-module scan.
std::vector<AlgElem> enumerate_quartic(const AlgebraRef& A) {
    std::vector<Scalar> ks = enumerate_field(A->k);
    std::vector<AlgElem> out;
    for (const Scalar& c3 : ks)
        for (const Scalar& c2 : ks)
            for (const Scalar& c1 : ks)
                for (const Scalar& c0 : ks)
                    out.push_back(alg_from_coords(A, {c0, c1, c2, c3}));
    return out;
}

// Certifies one candidate prime: centrality, injectivity on P_1, and the
// S^e decomposition of the cokernel with exact (f, e) bookkeeping.
CurvePoint certify_point(Ladder& lad, const NormalFormTable& tab, const NCPoly& g, size_t d) {
    const Field& k = g.k;
    Scalar one = scalar_one(k);
    for (const std::string& v : tab.pres.generators) {
        NCPoly gen = nc_term(k, v, one);
        if (!(multiply(tab, g, gen) == multiply(tab, gen, g)))
            throw PresentationMismatch("prime candidate " + nc_to_string(g) + " is not central");
    }
    Morphism pi = evaluate_through_ladder(lad, g);
    KernelCokernel kc = kernel_cokernel(pi);
    if (kc.kernel.rep.m != 0 || kc.kernel.rep.n != 0)
        throw ExactnessFailure("prime " + nc_to_string(g) + " is not injective on P_1");
    Rep C = kc.cokernel.rep;
    const Rep& L = build_P(lad, 1);
    // The first lambda in F \ k with Hom(T_lambda, C) nonzero names the
    // simple: distinct simple regulars admit no nonzero morphisms. A miss
    // means the cokernel itself is simple.
    std::optional<Rep> found;
    for (const AlgElem& lam : enumerate_quartic(lad.F)) {
        if (alg_in_base(lam)) continue;
        Rep T = simple_regular(lam);
        if (!hom_basis(T, C).empty()) {
            found = T;
            break;
        }
    }
    Rep S = found ? *found : C;
    PointData pd = index_multiplicity(S, L);
    bool books = pd.f * pd.e == d && hom_basis(L, C).size() == 2 * d &&
                 rep_dim_k(C) == pd.e * rep_dim_k(S) &&
                 end_ring(C).dim == pd.e * pd.e * pd.end.dim;
    if (!books)
        throw NonIntegralInvariant("cokernel of " + nc_to_string(g) +
                                   " fails the S^e dimension bookkeeping");
    return CurvePoint{g, d, pd.f, pd.e, pd.end.recognition, S, C};
}

} // namespace

Morphism evaluate_through_ladder(Ladder& lad, const NCPoly& g) {
    if (g.terms.empty())
        throw UnsupportedShape("the zero polynomial defines no ladder morphism");
    size_t d = g.terms.begin()->first.size();
    if (d == 0) throw UnsupportedShape("degree-zero scalars define no ladder morphism");
    std::optional<Morphism> acc;
    for (const auto& [w, c] : g.terms) {
        if (w.size() != d)
            throw UnsupportedShape("ladder evaluation needs a homogeneous polynomial");
        Morphism m = morphism_scale(c, evaluate_word(lad, w));
        acc = acc ? morphism_add(*acc, m) : m;
    }
    return *acc;
}

std::vector<CurvePoint> enumerate_points(const AlgebraRef& F, size_t max_degree) {
    if (F->variant != BimoduleVariant::comm_ext)
        throw UnsupportedShape("points are enumerated for commutative quartic towers only");
    if (!field_size(F->k))
        throw InfiniteField("point enumeration needs a finite base field");
    if (max_degree > 3)
        throw DegreeBoundExceeded("certified point data stops at degree 3: even degree 4 "
                                  "would need simples beyond the (2,1) family");
    Ladder lad = make_ladder(F);
    NormalFormTable tab = make_normal_form_table(presentation_for(F));
    certify_dimensions(tab, lad, std::max<size_t>(2 * max_degree, 4));
    const Field& k = F->k;
    Scalar one = scalar_one(k);
    std::vector<CurvePoint> out;
    if (max_degree >= 1) out.push_back(certify_point(lad, tab, nc_term(k, "X", one), 1));
    if (max_degree >= 2) {
        // Monic linear polynomials u + c in u = Y^2/X^2 exhaust the primes
        // of degree 2. Odd degrees above 1 carry none: X divides every
        // weighted-homogeneous polynomial of odd degree.
        for (const Scalar& c : enumerate_field(k)) {
            NCPoly g = nc_term(k, "YY", one);
            if (!c.is_zero()) g = nc_add(g, nc_term(k, "XX", c));
            out.push_back(certify_point(lad, tab, g, 2));
        }
    }
    std::sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return nc_to_string(a.prime) < nc_to_string(b.prime);
    });
    return out;
}

CurveDescriptor classify_kronecker(const Field& k) {
    CurveDescriptor out;
    out.verdict = CurveVerdict::commutative;
    out.brauer_severi = true;
    out.function_field = {k->name() + "(T)", "the whole function field", 1, true};
    out.note = "Kronecker bimodule k^2: the projective line over " + k->name();
    return out;
}

CurveDescriptor classify_commutative(const AlgebraRef& F) {
    CurveDescriptor out;
    if (F->variant != BimoduleVariant::comm_ext) {
        DivisionVerdict dv = is_division_algebra(F);
        if (dv.verdict == Tri::no)
            throw UnsupportedShape("the quaternion algebra splits, so it carries no tame "
                                   "bimodule curve: " + dv.method);
        if (dv.verdict == Tri::unknown) {
            out.verdict = CurveVerdict::unknown;
            out.note = "division-ness of the quaternion algebra is undecided: " + dv.method;
            return out;
        }
        out.verdict = CurveVerdict::commutative;
        out.brauer_severi = true;
        out.function_field = function_field_presentation(F);
        out.note = "Brauer-Severi curve of the quaternion division algebra " + F->name();
        return out;
    }
    PrimitiveElementResult per = primitive_element_exists(F);
    if (per.exists == Tri::unknown) {
        out.verdict = CurveVerdict::unknown;
        out.note = "primitive-element search undecided: " + per.reason;
        return out;
    }
    bool commutative = (per.exists == Tri::no);
    try {
        out.function_field = function_field_presentation(F);
        if (out.function_field.commutative != commutative)
            throw PresentationMismatch(
                "function-field presentation disagrees with the primitive-element test");
    } catch (const UnsupportedShape&) {
        // Towers with linear terms have no dehomogenized display; the
        // verdict still stands on the primitive-element test.
        out.function_field.field = "";
        out.function_field.centre = "";
        out.function_field.s = commutative ? 1 : 2;
        out.function_field.commutative = commutative;
    }
    if (commutative) {
        out.verdict = CurveVerdict::commutative;
        out.brauer_severi = false;
        out.note = "commutative curve of a purely inseparable biquadratic extension; "
                   "not Brauer-Severi";
    } else {
        out.verdict = CurveVerdict::noncommutative;
        out.note = "noncommutative curve of skewness 2: K/k has a primitive element";
    }
    return out;
}

CurveDescriptor classify_commutative(const SkewPolyAlgebra& S) {
    CurveDescriptor out;
    out.function_field = function_field_presentation(S);
    if (S.n == 1) {
        out.verdict = CurveVerdict::commutative;
        out.brauer_severi = true;
        out.note = "trivial twist: the Kronecker curve over " + S.K->name();
    } else {
        out.verdict = CurveVerdict::noncommutative;
        out.note = "cyclic extension of degree " + std::to_string(S.n) +
                   ": skewness equals the degree";
    }
    return out;
}

ShiftReport has_efficient_tubular_shift(const AlgebraRef& F, size_t search_bound) {
    if (F->variant != BimoduleVariant::comm_ext) {
        DivisionVerdict dv = is_division_algebra(F);
        if (dv.verdict == Tri::no)
            throw UnsupportedShape("the quaternion algebra splits, so it carries no tame "
                                   "bimodule curve: " + dv.method);
        if (dv.verdict == Tri::unknown)
            return {Tri::unknown, std::nullopt,
                    "division-ness of the quaternion algebra is undecided: " + dv.method};
    }
    Ladder lad = make_ladder(F);
    const Rep& L = build_P(lad, 1);
    KernelCokernel kc = kernel_cokernel(build_XYZ(lad, 1).X);
    if (kc.kernel.rep.m != 0 || kc.kernel.rep.n != 0)
        throw ExactnessFailure("X is not injective on P_1");
    Rep C = kc.cokernel.rep;
    PointData pd = index_multiplicity(C, L);
    if (pd.f == 1 && pd.e == 1) {
        CurvePoint w{nc_term(F->k, "X", scalar_one(F->k)), 1, 1, 1,
                     pd.end.recognition, pd.S, C};
        return {Tri::yes, std::move(w),
                "unirational: the simple at the inner quadratic subfield k(x) has f = e = 1"};
    }
    // Defensive fallbacks; the inner quadratic subfield succeeds for every
    // valid tower, so these paths only fire on unexpected (f, e) data.
    if (field_size(F->k) && F->variant == BimoduleVariant::comm_ext) {
        std::vector<CurvePoint> pts = enumerate_points(F, 2);
        for (CurvePoint& pt : pts)
            if (pt.f == 1 && pt.e == 1)
                return {Tri::yes, std::move(pt),
                        "unirational point found in the degree <= 2 census"};
        return {Tri::unknown, std::nullopt,
                "no unirational point of degree <= 2; census bound reached"};
    }
    size_t tried = 0;
    for (const QuadraticSubfield& qs : intermediate_quadratic_fields(F)) {
        if (++tried > search_bound) break;
        PointData q = index_multiplicity(simple_regular(qs.generator), L);
        if (q.f == 1 && q.e == 1)
            return {Tri::yes, std::nullopt,
                    "unirational simple at the intermediate quadratic subfield k(" +
                        alg_to_string(qs.generator) + ")"};
    }
    return {Tri::unknown, std::nullopt,
            "intermediate quadratic subfields exhausted without a unirational point"};
}

ShiftReport has_efficient_tubular_shift(const SkewPolyAlgebra& S) {
    uint64_t q = 1;
    for (size_t i = 0; i < S.e; ++i) q *= S.p;
    return {Tri::yes, std::nullopt,
            "the base field F" + std::to_string(q) +
                " is finite, so a unirational point exists and its tubular shift is efficient"};
}

} // namespace tamecurve
