#include "tamecurve/algebra.hpp"

#include <algorithm>
#include <map>

namespace tamecurve {

std::string_view variant_name(BimoduleVariant v) {
    switch (v) {
    case BimoduleVariant::comm_ext: return "commutative quartic tower";
    case BimoduleVariant::skew_ext: return "quaternion (char != 2)";
    case BimoduleVariant::quat_char2: return "quaternion (char 2)";
    }
    return "?";
}

std::string Algebra::name() const {
    return std::string(variant_name(variant)) + " over " + k->name();
}

namespace {

// Linear combinations of words in x, y, reduced by the defining rules to the
// normal basis "", "x", "y", "xy". Used once per algebra to build the table.
using WordCombo = std::map<std::string, Scalar>;

void combo_add(WordCombo& acc, const std::string& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

// One rewriting step on the leftmost reducible pair; returns false if the
// word is already normal.
bool reduce_step(const Algebra& A, const std::string& w, const Scalar& c, WordCombo& out) {
    const Field& k = A.k;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        std::string pre = w.substr(0, i), post = w.substr(i + 2);
        auto emit = [&](const std::string& mid, const Scalar& s) {
            combo_add(out, pre + mid + post, c * s);
        };
        if (w[i] == 'x' && w[i + 1] == 'x') {
            emit("x", A.par.c1);
            emit("", A.par.c0);
            return true;
        }
        if (w[i] == 'y' && w[i + 1] == 'y') {
            emit("y", A.par.d1);
            emit("", A.par.a0);
            emit("x", A.par.a1);
            return true;
        }
        if (w[i] == 'y' && w[i + 1] == 'x') {
            switch (A.variant) {
            case BimoduleVariant::comm_ext: emit("xy", scalar_one(k)); break;
            case BimoduleVariant::skew_ext: emit("xy", -scalar_one(k)); break;
            case BimoduleVariant::quat_char2:
                emit("xy", scalar_one(k));
                emit("y", -scalar_one(k)); // yx = xy - y, i.e. xy = y + yx
                break;
            }
            return true;
        }
    }
    return false;
}

WordCombo reduce_word(const Algebra& A, const std::string& word) {
    WordCombo normal;
    std::vector<std::pair<std::string, Scalar>> work{{word, scalar_one(A.k)}};
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        WordCombo step;
        if (!reduce_step(A, w, c, step)) {
            combo_add(normal, w, c);
            continue;
        }
        for (auto& [w2, c2] : step) work.emplace_back(w2, c2);
    }
    return normal;
}

size_t basis_index(const std::string& w) {
    if (w.empty()) return 0;
    if (w == "x") return 1;
    if (w == "y") return 2;
    if (w == "xy") return 3;
    throw Inconsistent("word '" + w + "' did not reduce to the normal basis");
}

void build_table(Algebra& A) {
    static const std::array<std::string, 4> words = {"", "x", "y", "xy"};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            for (auto& coord : A.table[i][j]) coord = scalar_zero(A.k);
            for (auto& [w, c] : reduce_word(A, words[i] + words[j]))
                A.table[i][j][basis_index(w)] = c;
        }
}

void check_associativity(const AlgebraRef& A) {
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            for (size_t l = 0; l < 4; ++l) {
                AlgElem lhs = (alg_basis(A, i) * alg_basis(A, j)) * alg_basis(A, l);
                AlgElem rhs = alg_basis(A, i) * (alg_basis(A, j) * alg_basis(A, l));
                if (!(lhs == rhs))
                    throw NotAssociative("basis triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(l) + ")");
            }
}

void check_commutativity_flag(const AlgebraRef& A) {
    bool comm = true;
    for (size_t i = 0; i < 4 && comm; ++i)
        for (size_t j = 0; j < 4 && comm; ++j)
            if (!(alg_basis(A, i) * alg_basis(A, j) == alg_basis(A, j) * alg_basis(A, i)))
                comm = false;
    if (comm != A->commutative)
        throw NotAssociative("commutativity flag disagrees with the table");
}

} // namespace

QuadExt inner_quadratic(const Algebra& A) { return QuadExt{A.k, A.par.c1, A.par.c0}; }

AlgebraRef make_tower(const Field& k, const Scalar& c1, const Scalar& c0, const Scalar& d1,
                      const Scalar& a0, const Scalar& a1) {
    if (!quadratic_irreducible(c1, c0))
        throw ReduciblePolynomial("x^2 - c1*x - c0 has a root in " + k->name());
    auto A = std::make_shared<Algebra>();
    A->k = k;
    A->variant = BimoduleVariant::comm_ext;
    A->par = {c1, c0, d1, a0, a1};
    A->commutative = true;
    QuadExt K = inner_quadratic(*A);
    if (!qe_quadratic_roots(K, qe_scalar(K, d1), QE{a0, a1}).empty())
        throw ReduciblePolynomial("y^2 - d1*y - (a0 + a1*x) has a root in k(x)");
    build_table(*A);
    AlgebraRef ref = A;
    check_associativity(ref);
    check_commutativity_flag(ref);
    return ref;
}

AlgebraRef make_quaternion(const Field& k, const Scalar& a, const Scalar& b) {
    if (field_char(k) == 2)
        throw UnsupportedShape("this quaternion shape needs characteristic != 2");
    if (a.is_zero() || b.is_zero())
        throw UnsupportedShape("quaternion parameters must be nonzero");
    auto A = std::make_shared<Algebra>();
    A->k = k;
    A->variant = BimoduleVariant::skew_ext;
    Scalar z = scalar_zero(k);
    A->par = {z, a, z, b, z};
    A->commutative = false;
    build_table(*A);
    AlgebraRef ref = A;
    check_associativity(ref);
    check_commutativity_flag(ref);
    return ref;
}

AlgebraRef make_quaternion_char2(const Field& k, const Scalar& c0, const Scalar& a0) {
    if (field_char(k) != 2)
        throw UnsupportedShape("this quaternion shape needs characteristic 2");
    if (a0.is_zero()) throw UnsupportedShape("y^2 = a0 must be nonzero");
    auto A = std::make_shared<Algebra>();
    A->k = k;
    A->variant = BimoduleVariant::quat_char2;
    Scalar z = scalar_zero(k);
    A->par = {scalar_one(k), c0, z, a0, z};
    A->commutative = false;
    build_table(*A);
    AlgebraRef ref = A;
    check_associativity(ref);
    check_commutativity_flag(ref);
    return ref;
}

bool AlgElem::is_zero() const {
    for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
}

bool AlgElem::operator==(const AlgElem& o) const { return c == o.c; }

AlgElem AlgElem::operator+(const AlgElem& o) const {
    AlgElem r(*this);
    for (size_t i = 0; i < 4; ++i) r.c[i] += o.c[i];
    return r;
}

AlgElem AlgElem::operator-() const {
    AlgElem r(*this);
    for (auto& v : r.c) v = -v;
    return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator*(const AlgElem& o) const {
    AlgElem r = alg_zero(A);
    for (size_t i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < 4; ++j) {
            if (o.c[j].is_zero()) continue;
            Scalar f = c[i] * o.c[j];
            for (size_t l = 0; l < 4; ++l) r.c[l] += f * A->table[i][j][l];
        }
    }
    return r;
}

AlgElem alg_zero(const AlgebraRef& A) {
    return {A, std::vector<Scalar>(4, scalar_zero(A->k))};
}

AlgElem alg_one(const AlgebraRef& A) { return alg_basis(A, 0); }

AlgElem alg_basis(const AlgebraRef& A, size_t i) {
    AlgElem r = alg_zero(A);
    r.c[i] = scalar_one(A->k);
    return r;
}

AlgElem alg_from_scalar(const AlgebraRef& A, const Scalar& s) {
    AlgElem r = alg_zero(A);
    r.c[0] = s;
    return r;
}

AlgElem alg_from_coords(const AlgebraRef& A, std::vector<Scalar> coords) {
    if (coords.size() != 4) throw DimensionMismatch("algebra elements have 4 coordinates");
    return {A, std::move(coords)};
}

AlgElem alg_scale(const Scalar& s, const AlgElem& v) {
    AlgElem r(v);
    for (auto& x : r.c) x = s * x;
    return r;
}

bool alg_in_base(const AlgElem& v) {
    return v.c[1].is_zero() && v.c[2].is_zero() && v.c[3].is_zero();
}

SMat left_mult_matrix(const AlgElem& a) {
    SMat m = smat_zero(a.A->k, 4, 4);
    for (size_t j = 0; j < 4; ++j) {
        AlgElem col = a * alg_basis(a.A, j);
        for (size_t i = 0; i < 4; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

SMat right_mult_matrix(const AlgElem& a) {
    SMat m = smat_zero(a.A->k, 4, 4);
    for (size_t j = 0; j < 4; ++j) {
        AlgElem col = alg_basis(a.A, j) * a;
        for (size_t i = 0; i < 4; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

std::optional<AlgElem> alg_inv(const AlgElem& a) {
    if (a.is_zero()) return std::nullopt;
    SMat L = left_mult_matrix(a);
    SMat e = smat_zero(a.A->k, 4, 1);
    e.at(0, 0) = scalar_one(a.A->k);
    try {
        SMat v = smat_solve(L, e);
        AlgElem b = alg_from_coords(a.A, {v.at(0, 0), v.at(1, 0), v.at(2, 0), v.at(3, 0)});
        if ((a * b == alg_one(a.A)) && (b * a == alg_one(a.A))) return b;
    } catch (const Inconsistent&) {
    }
    return std::nullopt;
}

std::string alg_to_string(const AlgElem& a) {
    std::string s;
    for (size_t i = 0; i < 4; ++i) {
        if (a.c[i].is_zero()) continue;
        std::string cs = scalar_to_string(a.c[i]);
        std::string term;
        if (i == 0)
            term = cs;
        else if (cs == "1")
            term = Algebra::basis_names[i];
        else if (cs.find_first_of("+-/ ") != std::string::npos)
            term = "(" + cs + ")*" + Algebra::basis_names[i];
        else
            term = cs + "*" + Algebra::basis_names[i];
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

AlgElem random_alg_elem(const AlgebraRef& A, std::mt19937_64& rng, unsigned size) {
    AlgElem r = alg_zero(A);
    for (auto& v : r.c) v = random_scalar(A->k, rng, size);
    return r;
}

std::vector<AlgElem> enumerate_algebra(const AlgebraRef& A, uint64_t limit) {
    auto q = field_size(A->k);
    if (!q) throw InfiniteField("enumeration of " + A->name());
    uint64_t total = 1;
    for (int i = 0; i < 4; ++i) {
        total *= *q;
        if (total > limit)
            throw SearchSpaceTooLarge(A->name() + " has more than " + std::to_string(limit) +
                                      " elements");
    }
    std::vector<Scalar> base = enumerate_field(A->k);
    std::vector<AlgElem> out;
    out.reserve(total);
    for (uint64_t n = 0; n < total; ++n) {
        uint64_t m = n;
        AlgElem e = alg_zero(A);
        for (int i = 0; i < 4; ++i) {
            e.c[i] = base[m % *q];
            m /= *q;
        }
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

void push_unique(std::vector<AlgElem>& out, const AlgElem& z) {
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
}

// K-coordinates of an element of a commutative tower: v = vK + vy * y with
// vK, vy in K = k(x), after the y-shift used by the caller (none in char 2).
struct KSplit {
    QE vK, vy;
};

KSplit split_over_K(const AlgElem& v) { return {{v.c[0], v.c[1]}, {v.c[2], v.c[3]}}; }

AlgElem join_over_K(const AlgebraRef& A, const QE& vK, const QE& vy) {
    return alg_from_coords(A, {vK.a, vK.b, vy.a, vy.b});
}

// Square roots in characteristic 2 via k^2-descent: z = sum c_i e_i has
// z^2 = sum c_i^2 e_i^2, and matching square-basis components of both sides
// turns the search into one k-linear solve (unique solution or none).
std::vector<AlgElem> alg_sqrt_char2(const AlgElem& D) {
    const AlgebraRef& A = D.A;
    const Field& k = A->k;
    auto basis = char2_square_basis(k);
    size_t S = basis.size();
    SMat M = smat_zero(k, 4 * S, 4), rhs = smat_zero(k, 4 * S, 1);
    for (size_t i = 0; i < 4; ++i) {
        AlgElem sq = alg_basis(A, i) * alg_basis(A, i);
        for (size_t j = 0; j < 4; ++j) {
            auto beta = char2_square_decompose(sq.c[j]);
            for (size_t s = 0; s < S; ++s) M.at(j * S + s, i) = beta[s];
        }
    }
    for (size_t j = 0; j < 4; ++j) {
        auto delta = char2_square_decompose(D.c[j]);
        for (size_t s = 0; s < S; ++s) rhs.at(j * S + s, 0) = delta[s];
    }
    try {
        SMat sol = smat_solve(M, rhs);
        AlgElem z = alg_from_coords(A, {sol.at(0, 0), sol.at(1, 0), sol.at(2, 0), sol.at(3, 0)});
        if (z * z == D) return {z};
    } catch (const Inconsistent&) {
    }
    return {};
}

} // namespace

std::vector<AlgElem> alg_sqrt(const AlgElem& D) {
    const AlgebraRef& A = D.A;
    if (!A->commutative) throw UnsupportedShape("square roots only in commutative towers");
    const Field& k = A->k;
    if (field_size(k)) {
        std::vector<AlgElem> out;
        for (const AlgElem& z : enumerate_algebra(A))
            if (z * z == D) push_unique(out, z);
        return out;
    }
    if (field_char(k) == 2) return alg_sqrt_char2(D);
    // Characteristic != 2: shift y so that y'^2 = e in K, write z = u + v*y',
    // and match K-components. v = 0 needs a K-square root; v != 0 leads to a
    // K-quadratic in W = v^2.
    QuadExt K = inner_quadratic(*A);
    Scalar two = scalar_from_int(k, 2), four = scalar_from_int(k, 4);
    Scalar half_d1 = A->par.d1 / two;
    QE e{A->par.a0 + A->par.d1 * A->par.d1 / four, A->par.a1};
    // Coordinates of D over (1, x, y', xy'): y = y' + d1/2.
    KSplit d = split_over_K(D);
    QE DK = qe_add(K, d.vK, {half_d1 * d.vy.a, half_d1 * d.vy.b});
    QE Dy = d.vy;
    std::vector<std::pair<QE, QE>> candidates; // (u, v) with z = u + v y'
    if (qe_is_zero(Dy))
        for (const QE& u : qe_sqrt(K, DK)) candidates.emplace_back(u, qe_zero(K));
    if (qe_is_zero(e)) throw UnsupportedShape("degenerate tower (y'^2 = 0)");
    // e*W^2 - DK*W + Dy^2/4 = 0, i.e. W^2 - (DK/e) W - (-Dy^2/(4e)) = 0.
    QE einv = qe_inv(K, e);
    QE B = qe_mul(K, DK, einv);
    QE Dy2 = qe_mul(K, Dy, Dy);
    QE C = qe_neg(K, qe_mul(K, qe_mul(K, Dy2, einv), qe_scalar(K, four.inv())));
    for (const QE& W : qe_quadratic_roots(K, B, C))
        for (const QE& v : qe_sqrt(K, W)) {
            if (qe_is_zero(v)) continue;
            QE u = qe_mul(K, Dy, qe_inv(K, qe_mul(K, qe_scalar(K, two), v)));
            candidates.emplace_back(u, v);
        }
    std::vector<AlgElem> out;
    for (auto& [u, v] : candidates) {
        // Back to (1, x, y, xy): u + v*y' = (u - d1/2 v) + v*y.
        QE shift{u.a - half_d1 * v.a, u.b - half_d1 * v.b};
        AlgElem z = join_over_K(A, shift, v);
        if (z * z == D) push_unique(out, z);
    }
    return out;
}

std::vector<AlgElem> alg_quadratic_roots(const Scalar& B, const AlgElem& C) {
    const AlgebraRef& A = C.A;
    if (!A->commutative)
        throw UnsupportedShape("quadratic roots only in commutative towers");
    const Field& k = A->k;
    if (field_size(k)) {
        std::vector<AlgElem> out;
        AlgElem Be = alg_from_scalar(A, B);
        for (const AlgElem& t : enumerate_algebra(A))
            if (t * t - Be * t - C == alg_zero(A)) push_unique(out, t);
        return out;
    }
    if (field_char(k) != 2) {
        Scalar two = scalar_from_int(k, 2);
        AlgElem B2 = alg_from_scalar(A, B / two);
        std::vector<AlgElem> out;
        for (const AlgElem& z : alg_sqrt(B2 * B2 + C)) push_unique(out, B2 + z);
        return out;
    }
    // Characteristic 2 over an infinite field.
    if (B.is_zero()) return alg_sqrt(C);
    // t = tK + ty*y: the y-part gives d1*ty^2 - B*ty - Cy = 0 over K, then
    // the K-part gives tK^2 - B*tK = CK - ty^2*(a0 + a1 x) - pick up d1: with
    // y^2 = d1 y + e0, t^2 = tK^2 + ty^2 e0 + ty^2 d1 y.
    QuadExt K = inner_quadratic(*A);
    QE e0{A->par.a0, A->par.a1};
    KSplit c = split_over_K(C);
    QE Bk = qe_scalar(K, B);
    std::vector<QE> tys;
    if (A->par.d1.is_zero()) {
        tys.push_back(qe_mul(K, qe_neg(K, c.vy), qe_inv(K, Bk)));
    } else {
        QE d1inv = qe_inv(K, qe_scalar(K, A->par.d1));
        for (const QE& t : qe_quadratic_roots(K, qe_mul(K, Bk, d1inv), qe_mul(K, c.vy, d1inv)))
            tys.push_back(t);
    }
    std::vector<AlgElem> out;
    for (const QE& ty : tys) {
        QE rhs = qe_sub(K, c.vK, qe_mul(K, qe_mul(K, ty, ty), e0));
        for (const QE& tK : qe_quadratic_roots(K, Bk, rhs)) {
            AlgElem t = join_over_K(A, tK, ty);
            AlgElem val = t * t - alg_from_scalar(A, B) * t - C;
            if (val.is_zero()) push_unique(out, t);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Division algebra test.

namespace {

std::optional<std::pair<AlgElem, AlgElem>> kernel_pair(const AlgElem& a) {
    SMat L = left_mult_matrix(a);
    SMat ker = smat_kernel(L);
    if (ker.cols == 0) return std::nullopt;
    AlgElem b = alg_from_coords(a.A, {ker.at(0, 0), ker.at(1, 0), ker.at(2, 0), ker.at(3, 0)});
    return std::make_pair(a, b);
}

} // namespace

DivisionVerdict is_division_algebra(const AlgebraRef& A, uint64_t search_bound, uint64_t seed) {
    const Field& k = A->k;
    if (A->variant == BimoduleVariant::comm_ext)
        return {Tri::yes, "tower of two irreducible quadratics is a field", std::nullopt};
    if (field_size(k)) {
        for (const AlgElem& a : enumerate_algebra(A)) {
            if (a.is_zero()) continue;
            if (auto zd = kernel_pair(a))
                return {Tri::no, "exhaustive scan found a zero divisor", zd};
        }
        return {Tri::yes, "exhaustive scan found no zero divisors", std::nullopt};
    }
    // Structural shortcuts: a square root of x^2 (or an Artin-Schreier root
    // in char 2) splits off a zero divisor, and likewise for y^2.
    if (A->variant == BimoduleVariant::skew_ext) {
        AlgElem x = alg_basis(A, 1), y = alg_basis(A, 2), one = alg_one(A);
        if (auto s = scalar_sqrt(A->par.c0)) {
            auto u = x - alg_from_scalar(A, *s), v = x + alg_from_scalar(A, *s);
            return {Tri::no, "x^2 is a square in k", std::make_pair(u, v)};
        }
        if (auto s = scalar_sqrt(A->par.a0)) {
            auto u = y - alg_from_scalar(A, *s), v = y + alg_from_scalar(A, *s);
            return {Tri::no, "y^2 is a square in k", std::make_pair(u, v)};
        }
        if (k->kind == FieldKind::rationals) {
            auto places = hilbert_places(A->par.c0.as_rat(), A->par.a0.as_rat());
            if (places) {
                for (const BigInt& p : *places)
                    if (hilbert_symbol(A->par.c0.as_rat(), A->par.a0.as_rat(), p) == -1) {
                        std::string at = p == 0 ? "the real place" : "p = " + p.str();
                        return {Tri::yes, "Hilbert symbol -1 at " + at, std::nullopt};
                    }
                // Split at every place: the norm form is isotropic; find an
                // explicit zero divisor by random search (must exist).
                std::mt19937_64 rng(seed);
                for (uint64_t i = 0; i < search_bound * 100; ++i) {
                    AlgElem a = random_alg_elem(A, rng, 2 + i / 1000);
                    if (a.is_zero()) continue;
                    if (auto zd = kernel_pair(a))
                        return {Tri::no, "all Hilbert symbols +1; zero divisor found", zd};
                }
                return {Tri::no, "all Hilbert symbols are +1 (algebra splits)", std::nullopt};
            }
        }
    }
    if (A->variant == BimoduleVariant::quat_char2) {
        AlgElem x = alg_basis(A, 1), y = alg_basis(A, 2), one = alg_one(A);
        auto roots = quadratic_roots_in_field(scalar_one(k), A->par.c0);
        if (!roots.empty()) {
            auto u = x - alg_from_scalar(A, roots[0]);
            auto v = u + one; // (x - s)(x - s - 1) = 0 when s^2 + s = c0
            return {Tri::no, "x^2 + x + c0 has a root in k", std::make_pair(u, v)};
        }
        if (auto s = scalar_sqrt(A->par.a0)) {
            auto u = y + alg_from_scalar(A, *s);
            return {Tri::no, "y^2 is a square in k ((y+s)^2 = 0)", std::make_pair(u, u)};
        }
    }
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < search_bound; ++i) {
        AlgElem a = random_alg_elem(A, rng, 2 + static_cast<unsigned>(i / 500));
        if (a.is_zero()) continue;
        if (auto zd = kernel_pair(a))
            return {Tri::no, "random search found a zero divisor", zd};
    }
    return {Tri::unknown,
            "no zero divisor among " + std::to_string(search_bound) + " random candidates",
            std::nullopt};
}

// ---------------------------------------------------------------------------
// Galois group.

AlgElem apply_matrix(const AlgebraRef& A, const SMat& m, const AlgElem& v) {
    AlgElem r = alg_zero(A);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) r.c[i] += m.at(i, j) * v.c[j];
    return r;
}

AlgElem automorphism_x_image(const AlgebraRef& A, const SMat& m) {
    return apply_matrix(A, m, alg_basis(A, 1));
}

AlgElem automorphism_y_image(const AlgebraRef& A, const SMat& m) {
    return apply_matrix(A, m, alg_basis(A, 2));
}

namespace {

SMat matrix_from_images(const AlgebraRef& A, const AlgElem& xi, const AlgElem& eta) {
    SMat m = smat_zero(A->k, 4, 4);
    AlgElem one = alg_one(A), prod = xi * eta;
    const std::array<const AlgElem*, 4> cols = {&one, &xi, &eta, &prod};
    for (size_t j = 0; j < 4; ++j)
        for (size_t i = 0; i < 4; ++i) m.at(i, j) = cols[j]->c[i];
    return m;
}

bool is_algebra_map(const AlgebraRef& A, const SMat& m) {
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            AlgElem lhs = apply_matrix(A, m, alg_basis(A, i) * alg_basis(A, j));
            AlgElem rhs = apply_matrix(A, m, alg_basis(A, i)) * apply_matrix(A, m, alg_basis(A, j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

} // namespace

GaloisGroup galois_group(const AlgebraRef& A) {
    if (A->variant != BimoduleVariant::comm_ext)
        throw UnsupportedShape("Galois groups are computed for commutative towers only");
    std::vector<SMat> elems;
    AlgElem a0e = alg_from_scalar(A, A->par.a0);
    for (const AlgElem& xi :
         alg_quadratic_roots(A->par.c1, alg_from_scalar(A, A->par.c0))) {
        AlgElem C = a0e + alg_scale(A->par.a1, xi);
        for (const AlgElem& eta : alg_quadratic_roots(A->par.d1, C)) {
            SMat m = matrix_from_images(A, xi, eta);
            if (smat_rank(m) != 4) continue;
            if (!is_algebra_map(A, m)) continue;
            if (std::find(elems.begin(), elems.end(), m) == elems.end()) elems.push_back(m);
        }
    }
    // Group sanity: closure under composition and inverses.
    for (const SMat& g : elems)
        for (const SMat& h : elems) {
            SMat gh = smat_mul(g, h);
            if (std::find(elems.begin(), elems.end(), gh) == elems.end())
                throw Inconsistent("automorphism set is not closed under composition");
        }
    SMat id = smat_identity(A->k, 4);
    std::string structure;
    switch (elems.size()) {
    case 1: structure = "trivial"; break;
    case 2: structure = "C2"; break;
    case 4: {
        bool has_order4 = false;
        for (const SMat& g : elems)
            if (!(smat_mul(g, g) == id)) has_order4 = true;
        structure = has_order4 ? "C4" : "V4";
        break;
    }
    default: structure = "order " + std::to_string(elems.size());
    }
    return {std::move(elems), structure};
}

// ---------------------------------------------------------------------------
// Primitive elements and quadratic subfields.

namespace {

size_t power_span_rank(const AlgElem& z, size_t powers) {
    const AlgebraRef& A = z.A;
    SMat m = smat_zero(A->k, powers, 4);
    AlgElem acc = alg_one(A);
    for (size_t i = 0; i < powers; ++i) {
        for (size_t j = 0; j < 4; ++j) m.at(i, j) = acc.c[j];
        acc = acc * z;
    }
    return smat_rank(m);
}

} // namespace

PrimitiveElementResult primitive_element_exists(const AlgebraRef& A) {
    if (A->variant != BimoduleVariant::comm_ext)
        throw UnsupportedShape("primitive elements concern commutative towers only");
    const Field& k = A->k;
    const TowerParams& p = A->par;
    if (field_char(k) == 2 && p.c1.is_zero() && p.d1.is_zero() && p.a1.is_zero())
        return {Tri::no, std::nullopt,
                "purely inseparable: every element squares into k, so each has degree <= 2"};
    AlgElem x = alg_basis(A, 1), y = alg_basis(A, 2);
    std::vector<AlgElem> candidates = {y, x, x + y};
    for (int lam = 2; lam <= 6; ++lam)
        candidates.push_back(x + alg_scale(scalar_from_int(k, lam), y));
    candidates.push_back(x * y);
    candidates.push_back(x + x * y);
    for (const AlgElem& z : candidates)
        if (power_span_rank(z, 4) == 4)
            return {Tri::yes, z, "powers 1, z, z^2, z^3 are k-independent"};
    if (field_size(k)) {
        for (const AlgElem& z : enumerate_algebra(A))
            if (power_span_rank(z, 4) == 4)
                return {Tri::yes, z, "powers 1, z, z^2, z^3 are k-independent"};
        return {Tri::no, std::nullopt, "exhaustive scan: no element of degree 4"};
    }
    return {Tri::unknown, std::nullopt, "structured candidate list exhausted"};
}

namespace {

// Canonical key of the 2-dimensional subspace spanned by 1 and z.
std::string span_key(const AlgElem& z) {
    SMat m = smat_zero(z.A->k, 2, 4);
    m.at(0, 0) = scalar_one(z.A->k);
    for (size_t j = 0; j < 4; ++j) m.at(1, j) = z.c[j];
    smat_rref(m);
    return smat_to_string(m);
}

// z^2 = t1*z + t0 if z^2 lies in span{1, z}; coefficients recovered from
// coordinates (valid because z has a nonzero coordinate off 1).
std::optional<std::pair<Scalar, Scalar>> quadratic_minpoly(const AlgElem& z) {
    const Field& k = z.A->k;
    AlgElem z2 = z * z;
    // Find a coordinate where z is nonzero away from the unit.
    for (size_t i = 1; i < 4; ++i) {
        if (z.c[i].is_zero()) continue;
        Scalar t1 = z2.c[i] / z.c[i];
        AlgElem rest = z2 - alg_scale(t1, z);
        if (alg_in_base(rest)) return std::make_pair(t1, rest.c[0]);
        return std::nullopt;
    }
    return std::nullopt;
}

void add_subfield(std::vector<QuadraticSubfield>& out, std::vector<std::string>& keys,
                  const AlgElem& z) {
    if (alg_in_base(z)) return;
    auto mp = quadratic_minpoly(z);
    if (!mp) return;
    std::string key = span_key(z);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) return;
    keys.push_back(key);
    out.push_back({z, mp->first, mp->second});
}

} // namespace

std::vector<QuadraticSubfield> intermediate_quadratic_fields(const AlgebraRef& A) {
    if (A->variant != BimoduleVariant::comm_ext)
        throw UnsupportedShape("quadratic subfields concern commutative towers only");
    const Field& k = A->k;
    std::vector<QuadraticSubfield> out;
    std::vector<std::string> keys;
    if (field_size(k)) {
        for (const AlgElem& z : enumerate_algebra(A)) add_subfield(out, keys, z);
        return out;
    }
    const TowerParams& p = A->par;
    AlgElem x = alg_basis(A, 1), y = alg_basis(A, 2);
    add_subfield(out, keys, x); // k(x) always works: x^2 = c1 x + c0
    if (p.a1.is_zero()) {
        add_subfield(out, keys, y);
        if (field_char(k) != 2) {
            Scalar two = scalar_from_int(k, 2);
            AlgElem xs = x - alg_from_scalar(A, p.c1 / two);
            AlgElem ys = y - alg_from_scalar(A, p.d1 / two);
            add_subfield(out, keys, xs * ys);
        } else if (p.c1.is_zero() && p.d1.is_zero()) {
            // Purely inseparable: representatives only (k(z) for every z
            // outside k is quadratic here, so the full list is infinite).
            add_subfield(out, keys, x * y);
        } else if (!p.c1.is_zero() && !p.d1.is_zero()) {
            // Both halves separable: the third subfield pairs the two
            // Artin-Schreier generators, z = (d1/c1) x + y.
            add_subfield(out, keys, alg_scale(p.d1 / p.c1, x) + y);
        }
        return out;
    }
    // a1 != 0: degree-2 generators have the form z = y*(s + t*x) (after the
    // usual y-shift in char != 2); the x-component of z^2 vanishing is a
    // conic with discriminant-style solvability in k.
    if (field_char(k) != 2) {
        Scalar two = scalar_from_int(k, 2);
        AlgElem ys = y - alg_from_scalar(A, p.d1 / two);
        // z = ys*(s + x) has z^2 = ys^2 (s + x)^2 in K, so z generates a
        // quadratic subfield exactly when the x-coordinate of z^2 vanishes.
        // That coordinate is a quadratic polynomial f(s); interpolate it.
        auto xcoeff = [&](const Scalar& s) {
            AlgElem z = ys * (alg_from_scalar(A, s) + x);
            return (z * z).c[1];
        };
        Scalar f0 = xcoeff(scalar_from_int(k, 0));
        Scalar f1 = xcoeff(scalar_from_int(k, 1));
        Scalar fm1 = xcoeff(scalar_from_int(k, -1));
        Scalar alpha = (f1 + fm1 - two * f0) / two;
        Scalar beta = (f1 - fm1) / two;
        Scalar gamma = f0;
        if (!alpha.is_zero()) {
            for (const Scalar& s : quadratic_roots_in_field(-(beta / alpha), -(gamma / alpha)))
                add_subfield(out, keys, ys * (alg_from_scalar(A, s) + x));
        } else if (!beta.is_zero()) {
            add_subfield(out, keys, ys * (alg_from_scalar(A, -(gamma / beta)) + x));
        }
        // t = 0 candidate: z = ys * s degenerate unless a1 = 0; skip.
    } else if (p.d1.is_zero()) {
        // char 2, y inseparable: generators have the form y*(s + x).
        auto xcoeff = [&](const Scalar& s) {
            AlgElem z = y * (alg_from_scalar(A, s) + x);
            return (z * z).c[1];
        };
        // The x-coefficient is alpha*s^2 + const in char 2; solve directly.
        Scalar f0 = xcoeff(scalar_zero(k));
        Scalar f1 = xcoeff(scalar_one(k));
        Scalar alpha = f1 - f0;
        if (!alpha.is_zero()) {
            if (auto s = scalar_sqrt(f0 / alpha)) // alpha s^2 + f0 = 0
                add_subfield(out, keys, y * (alg_from_scalar(A, *s) + x));
        }
    } else {
        // char 2, y separable: generators are alpha*x + y where
        // c1 alpha^2 + d1 alpha + a1 = 0 (only the beta = 1 scaling matters).
        if (p.c1.is_zero()) {
            add_subfield(out, keys, alg_scale(p.a1 / p.d1, x) + y);
        } else {
            for (const Scalar& al : quadratic_roots_in_field(p.d1 / p.c1, p.a1 / p.c1))
                add_subfield(out, keys, alg_scale(al, x) + y);
        }
    }
    return out;
}

} // namespace tamecurve
