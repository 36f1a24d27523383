#include "tamecurve/quadext.hpp"
#include "tamecurve/matrix.hpp"

#include <algorithm>

namespace tamecurve {

QE qe_zero(const QuadExt& K) { return {scalar_zero(K.k), scalar_zero(K.k)}; }
QE qe_one(const QuadExt& K) { return {scalar_one(K.k), scalar_zero(K.k)}; }
QE qe_x(const QuadExt& K) { return {scalar_zero(K.k), scalar_one(K.k)}; }
QE qe_scalar(const QuadExt& K, const Scalar& a) { return {a, scalar_zero(K.k)}; }
bool qe_is_zero(const QE& v) { return v.a.is_zero() && v.b.is_zero(); }
bool qe_in_base(const QE& v) { return v.b.is_zero(); }

QE qe_add(const QuadExt&, const QE& u, const QE& v) { return {u.a + v.a, u.b + v.b}; }
QE qe_sub(const QuadExt&, const QE& u, const QE& v) { return {u.a - v.a, u.b - v.b}; }
QE qe_neg(const QuadExt&, const QE& u) { return {-u.a, -u.b}; }

QE qe_mul(const QuadExt& K, const QE& u, const QE& v) {
    // (a + bx)(c + dx) = ac + bd*c0 + (ad + bc + bd*c1) x.
    Scalar bd = u.b * v.b;
    return {u.a * v.a + bd * K.c0, u.a * v.b + u.b * v.a + bd * K.c1};
}

QE qe_conj(const QuadExt& K, const QE& u) { return {u.a + u.b * K.c1, -u.b}; }

Scalar qe_norm(const QuadExt& K, const QE& u) {
    return u.a * u.a + u.a * u.b * K.c1 - u.b * u.b * K.c0;
}

Scalar qe_trace(const QuadExt& K, const QE& u) {
    Scalar two = scalar_from_int(K.k, 2);
    return two * u.a + u.b * K.c1;
}

QE qe_inv(const QuadExt& K, const QE& u) {
    Scalar n = qe_norm(K, u);
    if (n.is_zero()) throw DivisionByZero("non-unit in quadratic extension");
    Scalar ninv = n.inv();
    QE c = qe_conj(K, u);
    return {c.a * ninv, c.b * ninv};
}

QE qe_pow(const QuadExt& K, QE u, long long e) {
    if (e < 0) return qe_pow(K, qe_inv(K, u), -e);
    QE r = qe_one(K);
    while (e) {
        if (e & 1) r = qe_mul(K, r, u);
        u = qe_mul(K, u, u);
        e >>= 1;
    }
    return r;
}

namespace {

void push_unique(std::vector<QE>& out, const QE& z) {
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
}

std::vector<QE> qe_enumerate(const QuadExt& K) {
    std::vector<QE> all;
    for (const Scalar& a : enumerate_field(K.k))
        for (const Scalar& b : enumerate_field(K.k)) all.push_back({a, b});
    return all;
}

std::vector<QE> qe_sqrt_char2(const QuadExt& K, const QE& v) {
    const Field& k = K.k;
    // z = u + w*x gives z^2 = u^2 + w^2*c0 + w^2*c1*x.
    if (!K.c1.is_zero()) {
        auto w = scalar_sqrt(v.b / K.c1);
        if (!w) return {};
        auto u = scalar_sqrt(v.a + (*w) * (*w) * K.c0);
        if (!u) return {};
        return {{*u, *w}};
    }
    // Inseparable x: z^2 = u^2 + c0*w^2 always lies in k.
    if (!v.b.is_zero()) return {};
    // Solve u^2 + c0*w^2 = v.a by k^2-descent: with c0 = sum g_s^2 m_s and
    // v.a = sum d_s^2 m_s, the m_s components give u + w*g_0 = d_0 and
    // w*g_s = d_s (s >= 1), a linear system over k.
    auto basis = char2_square_basis(k);
    auto g = char2_square_decompose(K.c0);
    auto d = char2_square_decompose(v.a);
    size_t n = basis.size();
    SMat A = smat_zero(k, n, 2), rhs = smat_zero(k, n, 1);
    A.at(0, 0) = scalar_one(k);
    for (size_t s = 0; s < n; ++s) {
        A.at(s, 1) = g[s];
        rhs.at(s, 0) = d[s];
    }
    try {
        SMat sol = smat_solve(A, rhs);
        QE z{sol.at(0, 0), sol.at(1, 0)};
        if (qe_mul(K, z, z) == v) return {z};
    } catch (const Inconsistent&) {
    }
    return {};
}

} // namespace

std::vector<QE> qe_sqrt(const QuadExt& K, const QE& v) {
    const Field& k = K.k;
    if (qe_is_zero(v)) return {qe_zero(K)};
    if (field_size(k)) {
        std::vector<QE> out;
        for (const QE& z : qe_enumerate(K))
            if (qe_mul(K, z, z) == v) push_unique(out, z);
        return out;
    }
    if (field_char(k) == 2) return qe_sqrt_char2(K, v);
    std::vector<QE> out;
    Scalar two = scalar_from_int(k, 2), four = scalar_from_int(k, 4);
    if (v.b.is_zero()) {
        if (auto u = scalar_sqrt(v.a)) {
            push_unique(out, {*u, scalar_zero(k)});
            push_unique(out, {-*u, scalar_zero(k)});
        }
    }
    // w != 0 branch: with W = w^2, (c1^2 + 4c0) W^2 - (2 c1 D1 + 4 D0) W + D1^2 = 0.
    Scalar A = K.c1 * K.c1 + four * K.c0;
    Scalar B = two * K.c1 * v.b + four * v.a;
    Scalar C = v.b * v.b;
    std::vector<Scalar> Ws;
    if (A.is_zero()) {
        if (!B.is_zero()) Ws.push_back(C / B);
    } else {
        // Roots of A W^2 - B W + C = 0, i.e. W^2 - (B/A) W - (-C/A) = 0.
        for (const Scalar& W : quadratic_roots_in_field(B / A, -(C / A))) Ws.push_back(W);
    }
    for (const Scalar& W : Ws) {
        auto w0 = scalar_sqrt(W);
        if (!w0) continue;
        for (const Scalar& w : {*w0, -*w0}) {
            if (w.is_zero()) continue;
            Scalar u = (v.b / w - w * K.c1) / two;
            QE z{u, w};
            if (qe_mul(K, z, z) == v) push_unique(out, z);
        }
    }
    return out;
}

std::vector<QE> qe_quadratic_roots(const QuadExt& K, const QE& B, const QE& C) {
    const Field& k = K.k;
    if (field_size(k)) {
        std::vector<QE> out;
        for (const QE& t : qe_enumerate(K)) {
            QE val = qe_sub(K, qe_sub(K, qe_mul(K, t, t), qe_mul(K, B, t)), C);
            if (qe_is_zero(val)) push_unique(out, t);
        }
        return out;
    }
    if (field_char(k) != 2) {
        // Complete the square: roots are B/2 + z with z^2 = (B/2)^2 + C.
        Scalar two = scalar_from_int(k, 2);
        QE B2{B.a / two, B.b / two};
        QE D = qe_add(K, qe_mul(K, B2, B2), C);
        std::vector<QE> out;
        for (const QE& z : qe_sqrt(K, D)) push_unique(out, qe_add(K, B2, z));
        return out;
    }
    // Characteristic 2.
    if (qe_is_zero(B)) return qe_sqrt(K, C);
    // t = B*s turns the equation into s^2 + s = C/B^2 = d0 + d1*x; writing
    // s = s0 + s1*x gives s1^2*c1 + s1 = d1 and s0^2 + s0 = d0 + s1^2*c0.
    QE Binv = qe_inv(K, B);
    QE delta = qe_mul(K, qe_mul(K, C, Binv), Binv);
    Scalar one = scalar_one(k);
    std::vector<Scalar> s1s;
    if (K.c1.is_zero()) {
        auto s1 = scalar_sqrt(delta.b);
        if (s1) s1s.push_back(*s1);
    } else {
        // z = c1*s1 satisfies z^2 + z = c1*delta.b.
        for (const Scalar& z : quadratic_roots_in_field(one, K.c1 * delta.b))
            s1s.push_back(z / K.c1);
    }
    std::vector<QE> out;
    for (const Scalar& s1 : s1s)
        for (const Scalar& s0 :
             quadratic_roots_in_field(one, delta.a + s1 * s1 * K.c0)) {
            QE s{s0, s1};
            QE t = qe_mul(K, B, s);
            QE val = qe_sub(K, qe_sub(K, qe_mul(K, t, t), qe_mul(K, B, t)), C);
            if (qe_is_zero(val)) push_unique(out, t);
        }
    return out;
}

std::string qe_to_string(const QuadExt& K, const QE& v, const std::string& xname) {
    if (qe_is_zero(v)) return "0";
    std::string s;
    if (!v.a.is_zero()) s += scalar_to_string(v.a);
    if (!v.b.is_zero()) {
        if (!s.empty()) s += " + ";
        std::string b = scalar_to_string(v.b);
        if (b == "1")
            s += xname;
        else
            s += "(" + b + ")*" + xname;
    }
    return s;
}

} // namespace tamecurve
