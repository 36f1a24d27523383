#include "tamecurve/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tamecurve {

namespace {

using TermMap = std::map<std::string, Scalar, WordLengthLex>;

void add_into(TermMap& m, const std::string& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

std::string render_word(const std::string& w) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += w[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// Splits a coefficient into sign and magnitude, parenthesizing compound
// scalars so "u^2 + 1" cannot fuse with the monomial it multiplies.
std::pair<bool, std::string> render_coeff(const Scalar& c) {
    std::string s = scalar_to_string(c);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (s.find_first_of("+-/* ") != std::string::npos) s = "(" + s + ")";
    return {neg, s};
}

void check_letters(const std::string& w) {
    for (char ch : w)
        if (ch != 'X' && ch != 'Y' && ch != 'Z')
            throw UnsupportedShape("relation word uses a letter outside X, Y, Z: " + w);
}

void validate_presentation(const GradedPresentation& pres) {
    std::set<std::string> leads;
    for (const NCPoly& rel : pres.relations) {
        if (nc_is_zero(rel)) throw UnsupportedShape("zero relation in presentation");
        for (const auto& [w, c] : rel.terms) {
            if (w.size() != 2)
                throw UnsupportedShape("relations must be homogeneous of degree 2, got word '" + w + "'");
            check_letters(w);
        }
        leads.insert(rel.terms.rbegin()->first);
    }
    std::set<std::string> want = {"YX", "ZX", "ZY", "ZZ"};
    if (leads != want)
        throw UnsupportedShape("leading words of the relations must be exactly YX, ZX, ZY, ZZ");
}

// Scales a dehomogenized relation by -1 when its leading coefficient
// prints negative, so displays come out as V^2 + U^2 + 1 and not the
// negated twin. Purely cosmetic, the ideal is unchanged.
NCPoly display_normalize(const NCPoly& r) {
    if (nc_is_zero(r)) return r;
    if (render_coeff(r.terms.rbegin()->second).first) return nc_neg(r);
    return r;
}

} // namespace

NCPoly nc_zero(const Field& k) { return NCPoly{k, {}}; }

NCPoly nc_term(const Field& k, const std::string& word, const Scalar& c) {
    NCPoly r{k, {}};
    add_into(r.terms, word, c);
    return r;
}

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
    if (!same_field(a.k, b.k)) throw FieldMismatch("nc_add over different fields");
    NCPoly r = a;
    for (const auto& [w, c] : b.terms) add_into(r.terms, w, c);
    return r;
}

NCPoly nc_sub(const NCPoly& a, const NCPoly& b) { return nc_add(a, nc_neg(b)); }

NCPoly nc_neg(const NCPoly& a) {
    NCPoly r{a.k, {}};
    for (const auto& [w, c] : a.terms) r.terms.emplace(w, -c);
    return r;
}

NCPoly nc_scale(const Scalar& c, const NCPoly& a) {
    NCPoly r{a.k, {}};
    if (c.is_zero()) return r;
    for (const auto& [w, v] : a.terms) r.terms.emplace(w, c * v);
    return r;
}

NCPoly nc_concat(const NCPoly& a, const NCPoly& b) {
    if (!same_field(a.k, b.k)) throw FieldMismatch("nc_concat over different fields");
    NCPoly r{a.k, {}};
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) add_into(r.terms, wa + wb, ca * cb);
    return r;
}

bool nc_is_zero(const NCPoly& a) { return a.terms.empty(); }

std::string nc_to_string(const NCPoly& a) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        auto [neg, mag] = render_coeff(it->second);
        std::string piece;
        if (it->first.empty()) piece = mag;
        else if (mag == "1") piece = render_word(it->first);
        else piece = mag + "*" + render_word(it->first);
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

GradedPresentation presentation_for(const AlgebraRef& F) {
    const TowerParams& p = F->par;
    const Field& k = F->k;
    if (F->variant == BimoduleVariant::comm_ext && !(p.c1.is_zero() && p.d1.is_zero()))
        throw UnsupportedShape("orbit presentation needs the x^2 = c0, y^2 = a0 + a1 x tower shape");
    Scalar one = scalar_one(k);
    NCPoly r1 = nc_sub(nc_term(k, "XY", one), nc_term(k, "YX", one));
    NCPoly r2 = nc_sub(nc_term(k, "XZ", one), nc_term(k, "ZX", one));
    NCPoly r3 = nc_zero(k), r4 = nc_zero(k);
    switch (F->variant) {
    case BimoduleVariant::comm_ext:
        r3 = nc_add(nc_add(nc_term(k, "ZY", one), nc_term(k, "YZ", one)),
                    nc_term(k, "XX", p.a1));
        r4 = nc_add(nc_add(nc_term(k, "ZZ", one), nc_term(k, "YY", p.c0)),
                    nc_term(k, "XX", -p.a0));
        break;
    case BimoduleVariant::skew_ext:
        r3 = nc_sub(nc_term(k, "ZY", one), nc_term(k, "YZ", one));
        r4 = nc_add(nc_add(nc_term(k, "ZZ", one), nc_term(k, "YY", -p.c0)),
                    nc_term(k, "XX", -p.a0));
        break;
    case BimoduleVariant::quat_char2:
        r3 = nc_sub(nc_term(k, "ZY", one), nc_term(k, "YZ", one));
        r4 = nc_add(nc_add(nc_term(k, "ZZ", one), nc_term(k, "YY", p.c0)),
                    nc_add(nc_term(k, "XX", p.a0), nc_term(k, "YZ", one)));
        break;
    }
    GradedPresentation pres{k, {"X", "Y", "Z"}, {r1, r2, r3, r4}};
    validate_presentation(pres);
    return pres;
}

GradedPresentation presentation_from_relations(const Field& k, std::vector<NCPoly> rels) {
    for (const NCPoly& r : rels)
        if (!same_field(r.k, k)) throw FieldMismatch("relation over a different field");
    GradedPresentation pres{k, {"X", "Y", "Z"}, std::move(rels)};
    validate_presentation(pres);
    return pres;
}

NormalFormTable make_normal_form_table(GradedPresentation pres, size_t step_bound) {
    validate_presentation(pres);
    NormalFormTable t{std::move(pres), {}, step_bound};
    for (const NCPoly& rel : t.pres.relations) {
        auto lead = std::prev(rel.terms.end());
        Scalar inv = lead->second.inv();
        NCPoly rhs = nc_zero(t.pres.k);
        for (const auto& [w, c] : rel.terms)
            if (w != lead->first) add_into(rhs.terms, w, -(inv * c));
        t.rules.emplace(lead->first, std::move(rhs));
    }
    return t;
}

NCPoly normal_form(const NormalFormTable& t, const NCPoly& a) {
    NCPoly out = nc_zero(a.k);
    TermMap working = a.terms;
    size_t steps = 0;
    while (!working.empty()) {
        auto it = std::prev(working.end());
        std::string w = it->first;
        Scalar c = it->second;
        working.erase(it);
        size_t pos = std::string::npos;
        std::map<std::string, NCPoly>::const_iterator rule;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            auto r = t.rules.find(w.substr(i, 2));
            if (r != t.rules.end()) {
                pos = i;
                rule = r;
                break;
            }
        }
        if (pos == std::string::npos) {
            add_into(out.terms, w, c);
            continue;
        }
        if (++steps > t.step_bound)
            throw NonTerminating("rewriting exceeded the step bound");
        std::string pre = w.substr(0, pos), suf = w.substr(pos + 2);
        for (const auto& [rw, rc] : rule->second.terms)
            add_into(working, pre + rw + suf, c * rc);
    }
    return out;
}

NCPoly multiply(const NormalFormTable& t, const NCPoly& a, const NCPoly& b) {
    return normal_form(t, nc_concat(a, b));
}

bool is_commutative(const NormalFormTable& t) {
    Scalar one = scalar_one(t.pres.k);
    const std::string gens[3] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            NCPoly a = nc_term(t.pres.k, gens[i], one), b = nc_term(t.pres.k, gens[j], one);
            if (!nc_is_zero(nc_sub(multiply(t, a, b), multiply(t, b, a)))) return false;
        }
    return true;
}

std::vector<std::string> basis_words(const NormalFormTable& t, size_t n) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (char ch : {'X', 'Y', 'Z'}) {
            if (!cur.empty() && t.rules.count(std::string{cur.back(), ch})) continue;
            cur.push_back(ch);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

size_t dim_degree(const NormalFormTable& t, size_t n) { return basis_words(t, n).size(); }

SMat nc_coords(const NormalFormTable& t, const NCPoly& a, const std::vector<std::string>& basis) {
    SMat col = smat_zero(t.pres.k, basis.size(), 1);
    for (const auto& [w, c] : a.terms) {
        auto it = std::find(basis.begin(), basis.end(), w);
        if (it == basis.end())
            throw DimensionMismatch("polynomial has a term outside the given basis: " + w);
        col.at(static_cast<size_t>(it - basis.begin()), 0) = c;
    }
    return col;
}

std::vector<NCPoly> centre_basis(const NormalFormTable& t, size_t n) {
    const Field& k = t.pres.k;
    Scalar one = scalar_one(k);
    std::vector<std::string> bn = basis_words(t, n), bn1 = basis_words(t, n + 1);
    SMat M = smat_zero(k, 3 * bn1.size(), bn.size());
    for (size_t j = 0; j < bn.size(); ++j) {
        NCPoly m = nc_term(k, bn[j], one);
        for (int g = 0; g < 3; ++g) {
            NCPoly gen = nc_term(k, std::string{"XYZ"[g]}, one);
            NCPoly comm = nc_sub(multiply(t, m, gen), multiply(t, gen, m));
            SMat col = nc_coords(t, comm, bn1);
            for (size_t r = 0; r < bn1.size(); ++r)
                M.at(g * bn1.size() + r, j) = col.at(r, 0);
        }
    }
    SMat K = smat_kernel(M);
    std::vector<NCPoly> out;
    for (size_t c = 0; c < K.cols; ++c) {
        NCPoly z = nc_zero(k);
        for (size_t r = 0; r < K.rows; ++r) add_into(z.terms, bn[r], K.at(r, c));
        out.push_back(z);
    }
    return out;
}

void certify_dimensions(const NormalFormTable& t, Ladder& lad, size_t max_deg) {
    for (size_t d = 1; d <= max_deg; ++d) {
        const Rep& P1 = build_P(lad, 1);
        const Rep& Q = build_P(lad, 1 + d);
        size_t hom = hom_basis(P1, Q).size();
        size_t words = dim_degree(t, d);
        if (hom != words)
            throw PresentationMismatch("degree " + std::to_string(d) + ": rewriting basis has " +
                                       std::to_string(words) + " words but Hom dimension is " +
                                       std::to_string(hom));
    }
}

LadderPresentationReport derive_relations_from_ladder(Ladder& lad) {
    GradedPresentation pres = presentation_for(lad.F);
    const Field& k = lad.F->k;
    const LadderStep& s1 = build_XYZ(lad, 1);
    const LadderStep& s2 = build_XYZ(lad, 2);
    const Morphism* g1[3] = {&s1.X, &s1.Y, &s1.Z};
    const Morphism* g2[3] = {&s2.X, &s2.Y, &s2.Z};
    std::vector<std::string> words;
    SMat M = smat_zero(k, 0, 0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Morphism comp = compose(*g2[a], *g1[b]);
            SMat col = morphism_coords(comp);
            M = words.empty() ? col : smat_hstack(M, col);
            words.push_back(std::string{"XYZ"[a], "XYZ"[b]});
        }
    SMat K = smat_kernel(M);
    SMat rel = smat_zero(k, pres.relations.size(), words.size());
    for (size_t i = 0; i < pres.relations.size(); ++i)
        for (const auto& [w, c] : pres.relations[i].terms) {
            auto it = std::find(words.begin(), words.end(), w);
            rel.at(i, static_cast<size_t>(it - words.begin())) = c;
        }
    if (K.cols != pres.relations.size() || !smat_same_rowspace(smat_transpose(K), rel))
        throw PresentationMismatch("composition kernel (dim " + std::to_string(K.cols) +
                                   ") does not match the span of the presented relations");
    return LadderPresentationReport{std::move(pres), K.cols, std::move(K)};
}

FunctionFieldPresentation function_field_presentation(const AlgebraRef& F) {
    const TowerParams& p = F->par;
    const Field& k = F->k;
    if (F->variant == BimoduleVariant::comm_ext && !(p.c1.is_zero() && p.d1.is_zero()))
        throw UnsupportedShape("function field needs the x^2 = c0, y^2 = a0 + a1 x tower shape");
    std::string kn = k->name();
    Scalar one = scalar_one(k);
    FunctionFieldPresentation out;
    if (F->variant == BimoduleVariant::comm_ext &&
        !(field_char(k) == 2 && p.a1.is_zero())) {
        // U = Y/X, V = Z/X against the central X: the relations divide by X^2.
        NCPoly r1 = nc_add(nc_add(nc_term(k, "VU", one), nc_term(k, "UV", one)),
                           nc_term(k, "", p.a1));
        NCPoly r2 = nc_add(nc_add(nc_term(k, "VV", one), nc_term(k, "UU", p.c0)),
                           nc_term(k, "", -p.a0));
        out.field = "quotient division ring of " + kn + "<U, V>/(" +
                    nc_to_string(display_normalize(r1)) + ", " +
                    nc_to_string(display_normalize(r2)) + ")";
        out.centre = kn + "(U^2)";
        out.s = 2;
        out.commutative = false;
        return out;
    }
    NCPoly rel = nc_zero(k);
    switch (F->variant) {
    case BimoduleVariant::comm_ext:
        // char 2 with a1 = 0: commutative; U = X/Z, V = Y/Z divides by Z^2.
        rel = nc_add(nc_add(nc_term(k, "UU", p.a0), nc_term(k, "VV", p.c0)),
                     nc_term(k, "", one));
        break;
    case BimoduleVariant::skew_ext:
        // Commutative conic; U = X/Z, V = Y/Z divides ZZ = c0 YY + a0 XX by Z^2.
        rel = nc_add(nc_add(nc_term(k, "UU", p.a0), nc_term(k, "VV", p.c0)),
                     nc_term(k, "", -one));
        break;
    case BimoduleVariant::quat_char2:
        // Commutative; U = Y/X, V = Z/X divides ZZ + c0 YY + a0 XX + YZ by X^2.
        rel = nc_add(nc_add(nc_term(k, "VV", one), nc_term(k, "UV", one)),
                     nc_add(nc_term(k, "UU", p.c0), nc_term(k, "", p.a0)));
        break;
    }
    out.field = "quotient field of " + kn + "[U, V]/(" +
                nc_to_string(display_normalize(rel)) + ")";
    out.centre = "the whole function field";
    out.s = 1;
    out.commutative = true;
    return out;
}

SkewPolyAlgebra make_skew_poly(uint64_t p, size_t e, size_t n, size_t frob) {
    if (e == 0 || n == 0 || frob == 0) throw UnsupportedShape("skew polynomial parameters must be positive");
    if (std::gcd(frob, n) != 1)
        throw UnsupportedShape("the Frobenius power must generate Gal(K/k): gcd(frob, n) = 1");
    SkewPolyAlgebra S;
    S.K = make_finite_field(p, static_cast<unsigned>(e * n));
    S.p = p;
    S.e = e;
    S.n = n;
    S.frob = frob;
    return S;
}

Scalar skew_alpha(const SkewPolyAlgebra& S, const Scalar& c) {
    Scalar r = c;
    for (size_t i = 0; i < S.e * S.frob; ++i) r = frobenius(r);
    return r;
}

SkewElem skew_term(const SkewPolyAlgebra& S, size_t i, size_t j, const Scalar& c) {
    if (!same_field(c.field(), S.K)) throw FieldMismatch("skew coefficient outside K");
    SkewElem r;
    if (!c.is_zero()) r.terms.emplace(std::make_pair(i, j), c);
    return r;
}

SkewElem skew_add(const SkewPolyAlgebra& S, const SkewElem& a, const SkewElem& b) {
    (void)S;
    SkewElem r = a;
    for (const auto& [ij, c] : b.terms) {
        auto it = r.terms.find(ij);
        if (it == r.terms.end()) {
            r.terms.emplace(ij, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero()) r.terms.erase(it);
    }
    return r;
}

SkewElem skew_multiply(const SkewPolyAlgebra& S, const SkewElem& a, const SkewElem& b) {
    SkewElem r;
    for (const auto& [ij1, c1] : a.terms)
        for (const auto& [ij2, c2] : b.terms) {
            Scalar tw = c2;
            for (size_t t = 0; t < ij1.second; ++t) tw = skew_alpha(S, tw);
            Scalar c = c1 * tw;
            if (c.is_zero()) continue;
            auto key = std::make_pair(ij1.first + ij2.first, ij1.second + ij2.second);
            auto it = r.terms.find(key);
            if (it == r.terms.end()) {
                r.terms.emplace(key, c);
                continue;
            }
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    return r;
}

bool skew_is_zero(const SkewElem& a) { return a.terms.empty(); }

std::string skew_to_string(const SkewPolyAlgebra& S, const SkewElem& a) {
    (void)S;
    if (a.terms.empty()) return "0";
    std::string out;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        const auto& ij = it->first;
        const Scalar& c = it->second;
        auto [neg, mag] = render_coeff(c);
        std::string mono;
        if (ij.first) mono = "X" + (ij.first > 1 ? "^" + std::to_string(ij.first) : "");
        if (ij.second) {
            if (!mono.empty()) mono += "*";
            mono += "Y" + (ij.second > 1 ? "^" + std::to_string(ij.second) : "");
        }
        std::string piece;
        if (mono.empty()) piece = mag;
        else if (mag == "1") piece = mono;
        else piece = mag + "*" + mono;
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

size_t skew_dim_degree(const SkewPolyAlgebra& S, size_t d) { return S.n * (d + 1); }

std::vector<SkewElem> skew_centre_basis(const SkewPolyAlgebra& S, size_t d) {
    size_t m = S.e * S.n;
    Field Fp = make_prime_field(S.p);
    auto coords = [&](const Scalar& a) {
        FpPoly v = (S.K->kind == FieldKind::prime)
                       ? (a.is_zero() ? FpPoly{} : FpPoly{a.as_prime()})
                       : a.as_finite();
        v.resize(m, 0);
        return v;
    };
    std::vector<Scalar> basis;
    for (size_t i = 0; i < m; ++i) {
        FpPoly e(i + 1, 0);
        e[i] = 1;
        basis.push_back(scalar_from_coords(S.K, e));
    }
    // F_p-matrix whose columns are the images of the K-basis under f.
    auto matrix_of = [&](auto&& f) {
        SMat M = smat_zero(Fp, m, m);
        for (size_t j = 0; j < m; ++j) {
            FpPoly v = coords(f(basis[j]));
            for (size_t i = 0; i < m; ++i)
                M.at(i, j) = scalar_from_int(Fp, static_cast<long long>(v[i]));
        }
        return M;
    };
    SMat A = matrix_of([&](const Scalar& c) { return skew_alpha(S, c); });
    SMat AmI = smat_sub(A, smat_identity(Fp, m));
    Scalar one = scalar_one(S.K);
    SkewElem Y1 = skew_term(S, 0, 1, one);
    std::vector<SkewElem> out;
    for (size_t j = 0; j <= d; ++j) {
        // a X^{d-j} Y^j is central iff alpha(a) = a and a (alpha^j(c) - c) = 0
        // for every c in K; stack those F_p-linear conditions and take kernels.
        SMat cond = AmI;
        for (size_t t = 0; t < m; ++t) {
            Scalar ct = basis[t];
            Scalar twisted = ct;
            for (size_t s = 0; s < j; ++s) twisted = skew_alpha(S, twisted);
            Scalar diff = twisted - ct;
            cond = smat_vstack(cond, matrix_of([&](const Scalar& c) { return diff * c; }));
        }
        size_t dim = smat_kernel(cond).cols;
        size_t expect = (j % S.n == 0) ? S.e : 0;
        if (dim != expect)
            throw PresentationMismatch("degree " + std::to_string(d) + " centre: Y-power " +
                                       std::to_string(j) + " kernel has F_p-dimension " +
                                       std::to_string(dim) + ", expected " + std::to_string(expect));
        if (j % S.n != 0) continue;
        // Direct elementwise verification against Y and all of K.
        SkewElem mono = skew_term(S, d - j, j, one);
        if (!(skew_multiply(S, mono, Y1) == skew_multiply(S, Y1, mono)))
            throw PresentationMismatch("claimed central monomial fails to commute with Y");
        for (const Scalar& c : basis) {
            SkewElem sc = skew_term(S, 0, 0, c);
            if (!(skew_multiply(S, mono, sc) == skew_multiply(S, sc, mono)))
                throw PresentationMismatch("claimed central monomial fails to commute with K");
        }
        out.push_back(mono);
    }
    return out;
}

FunctionFieldPresentation function_field_presentation(const SkewPolyAlgebra& S) {
    uint64_t q = 1;
    for (size_t i = 0; i < S.e; ++i) q *= S.p;
    uint64_t qf = 1;
    for (size_t i = 0; i < S.frob; ++i) qf *= q;
    std::string Kn = S.K->name();
    std::string kn = "F" + std::to_string(q);
    FunctionFieldPresentation out;
    out.field = "skew rational functions " + Kn + "(T; alpha), T*c = alpha(c)*T with alpha(c) = c^" +
                std::to_string(qf);
    out.centre = kn + "(T^" + std::to_string(S.n) + ")";
    out.s = S.n;
    out.commutative = (S.n == 1);
    return out;
}

} // namespace tamecurve
