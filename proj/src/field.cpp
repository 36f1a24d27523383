#include "tamecurve/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tamecurve {

std::string FieldData::name() const {
    switch (kind) {
    case FieldKind::prime: return "F" + std::to_string(p);
    case FieldKind::finite: {
        uint64_t q = 1;
        for (unsigned i = 0; i < ext_deg; ++i) q *= p;
        return "F" + std::to_string(q);
    }
    case FieldKind::rationals: return "Q";
    case FieldKind::ratfunc: {
        std::string s = "F" + std::to_string(p) + "(";
        for (size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + vars[i];
        return s + ")";
    }
    }
    return "?";
}

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(uint64_t p) {
    if (p >= (uint64_t(1) << 31) || !is_prime_u64(p))
        throw UnsupportedField("characteristic must be a prime below 2^31, got " +
                               std::to_string(p));
}

} // namespace

Field make_prime_field(uint64_t p) {
    require_prime(p);
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::prime;
    d->p = p;
    return d;
}

Field make_finite_field(uint64_t p, unsigned m, FpPoly modulus, std::string gen) {
    require_prime(p);
    if (m == 0) throw UnsupportedField("extension degree must be positive");
    if (m == 1) return make_prime_field(p);
    if (modulus.empty()) modulus = fp_find_irreducible(m, p);
    fp_normalize(modulus);
    if (fp_deg(modulus) != static_cast<int>(m) || modulus.back() != 1)
        throw UnsupportedField("modulus must be monic of the stated degree");
    if (!fp_irreducible(modulus, p))
        throw ReduciblePolynomial("finite field modulus factors over F" + std::to_string(p));
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::finite;
    d->p = p;
    d->ext_deg = m;
    d->modulus = std::move(modulus);
    d->gen_name = std::move(gen);
    return d;
}

Field make_rationals() {
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::rationals;
    return d;
}

Field make_ratfunc(uint64_t p, std::vector<std::string> vars) {
    require_prime(p);
    if (vars.empty() || vars.size() > 2)
        throw UnsupportedField("rational function fields take 1 or 2 variables");
    if (vars.size() == 2 && vars[0] == vars[1])
        throw UnsupportedField("duplicate variable name");
    for (const auto& v : vars)
        if (v.empty()) throw UnsupportedField("empty variable name");
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::ratfunc;
    d->p = p;
    d->vars = std::move(vars);
    return d;
}

bool same_field(const Field& a, const Field& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->kind == b->kind && a->p == b->p && a->ext_deg == b->ext_deg &&
           a->modulus == b->modulus && a->vars == b->vars;
}

uint64_t field_char(const Field& f) { return f->p; }

std::optional<uint64_t> field_size(const Field& f) {
    switch (f->kind) {
    case FieldKind::prime: return f->p;
    case FieldKind::finite: {
        uint64_t q = 1;
        for (unsigned i = 0; i < f->ext_deg; ++i) q *= f->p;
        return q;
    }
    default: return std::nullopt;
    }
}

Frac frac_make(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator in function field");
    if (num.is_zero()) return {MPoly{num.p, {}}, mp_const(num.p, 1)};
    MPoly g = mp_gcd(num, den);
    MPoly n = mp_div_exact(num, g), d = mp_div_exact(den, g);
    uint64_t c = mod_inv(d.lead_coeff(), d.p);
    return {mp_scale(n, c), mp_scale(d, c)};
}

namespace {

BigRat make_rat(BigInt n, BigInt d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return BigRat(n, d);
}

void check_fields(const Scalar& a, const Scalar& b) {
    if (!a.valid() || !b.valid()) throw FieldMismatch("uninitialized scalar");
    if (!same_field(a.field(), b.field()))
        throw FieldMismatch(a.field()->name() + " vs " + b.field()->name());
}

} // namespace

bool Scalar::is_zero() const {
    switch (field_->kind) {
    case FieldKind::prime: return as_prime() == 0;
    case FieldKind::finite: return as_finite().empty();
    case FieldKind::rationals: return as_rat() == 0;
    case FieldKind::ratfunc: return as_frac().num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind) {
    case FieldKind::prime: return as_prime() == 1 % field_->p;
    case FieldKind::finite: return as_finite() == FpPoly{1};
    case FieldKind::rationals: return as_rat() == 1;
    case FieldKind::ratfunc: {
        const Frac& f = as_frac();
        return f.num == mp_const(field_->p, 1) && f.den == mp_const(field_->p, 1);
    }
    }
    return false;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!same_field(field_, o.field_)) return false;
    return v_ == o.v_;
}

uint64_t Scalar::as_prime() const { return std::get<uint64_t>(v_); }
const FpPoly& Scalar::as_finite() const { return std::get<FpPoly>(v_); }
const BigRat& Scalar::as_rat() const { return std::get<BigRat>(v_); }
const Frac& Scalar::as_frac() const { return std::get<Frac>(v_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_fields(*this, o);
    switch (field_->kind) {
    case FieldKind::prime: return {field_, mod_add(as_prime(), o.as_prime(), field_->p)};
    case FieldKind::finite: return {field_, fp_add(as_finite(), o.as_finite(), field_->p)};
    case FieldKind::rationals: return {field_, BigRat(as_rat() + o.as_rat())};
    case FieldKind::ratfunc: {
        const Frac &x = as_frac(), &y = o.as_frac();
        return {field_, frac_make(mp_add(mp_mul(x.num, y.den), mp_mul(y.num, x.den)),
                                  mp_mul(x.den, y.den))};
    }
    }
    throw UnsupportedField("add");
}

Scalar Scalar::operator-() const {
    switch (field_->kind) {
    case FieldKind::prime: return {field_, mod_neg(as_prime(), field_->p)};
    case FieldKind::finite: return {field_, fp_neg(as_finite(), field_->p)};
    case FieldKind::rationals: return {field_, BigRat(-as_rat())};
    case FieldKind::ratfunc: {
        const Frac& x = as_frac();
        return {field_, Frac{mp_neg(x.num), x.den}};
    }
    }
    throw UnsupportedField("neg");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_fields(*this, o);
    switch (field_->kind) {
    case FieldKind::prime: return {field_, mod_mul(as_prime(), o.as_prime(), field_->p)};
    case FieldKind::finite:
        return {field_, fp_mod(fp_mul(as_finite(), o.as_finite(), field_->p),
                               field_->modulus, field_->p)};
    case FieldKind::rationals: return {field_, BigRat(as_rat() * o.as_rat())};
    case FieldKind::ratfunc: {
        const Frac &x = as_frac(), &y = o.as_frac();
        return {field_, frac_make(mp_mul(x.num, y.num), mp_mul(x.den, y.den))};
    }
    }
    throw UnsupportedField("mul");
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->name());
    switch (field_->kind) {
    case FieldKind::prime: return {field_, mod_inv(as_prime(), field_->p)};
    case FieldKind::finite: {
        FpExtGcd e = fp_ext_gcd(as_finite(), field_->modulus, field_->p);
        if (fp_deg(e.g) != 0)
            throw DivisionByZero("non-unit in finite field (modulus not irreducible?)");
        return {field_, fp_mod(e.u, field_->modulus, field_->p)};
    }
    case FieldKind::rationals: {
        const BigRat& q = as_rat();
        return {field_, make_rat(denominator(q), numerator(q))};
    }
    case FieldKind::ratfunc: {
        const Frac& x = as_frac();
        return {field_, frac_make(x.den, x.num)};
    }
    }
    throw UnsupportedField("inv");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = scalar_one(field_), b = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Scalar scalar_zero(const Field& f) {
    switch (f->kind) {
    case FieldKind::prime: return {f, uint64_t(0)};
    case FieldKind::finite: return {f, FpPoly{}};
    case FieldKind::rationals: return {f, BigRat(0)};
    case FieldKind::ratfunc: return {f, Frac{MPoly{f->p, {}}, mp_const(f->p, 1)}};
    }
    throw UnsupportedField("zero");
}

Scalar scalar_one(const Field& f) { return scalar_from_int(f, 1); }

Scalar scalar_from_int(const Field& f, long long n) {
    switch (f->kind) {
    case FieldKind::prime:
    case FieldKind::finite:
    case FieldKind::ratfunc: {
        uint64_t r = mod_reduce(BigInt(n), f->p);
        if (f->kind == FieldKind::prime) return {f, r};
        if (f->kind == FieldKind::finite) return {f, r ? FpPoly{r} : FpPoly{}};
        return {f, Frac{mp_const(f->p, r), mp_const(f->p, 1)}};
    }
    case FieldKind::rationals: return {f, BigRat(n)};
    }
    throw UnsupportedField("from_int");
}

Scalar scalar_from_rat(const Field& f, const BigRat& q) {
    if (f->kind != FieldKind::rationals)
        throw UnsupportedField("rational literal in " + f->name());
    return {f, q};
}

Scalar scalar_from_coords(const Field& f, const FpPoly& coords) {
    if (f->kind == FieldKind::prime)
        return {f, coords.empty() ? uint64_t(0) : coords[0] % f->p};
    if (f->kind != FieldKind::finite) throw UnsupportedField("coords in " + f->name());
    FpPoly c = coords;
    for (auto& x : c) x %= f->p;
    fp_normalize(c);
    if (fp_deg(c) >= static_cast<int>(f->ext_deg))
        c = fp_mod(c, f->modulus, f->p);
    return {f, c};
}

Scalar scalar_from_poly(const Field& f, const MPoly& num) {
    if (f->kind != FieldKind::ratfunc) throw UnsupportedField("poly in " + f->name());
    return {f, Frac{num, mp_const(f->p, 1)}};
}

std::string scalar_to_string(const Scalar& a) {
    const Field& f = a.field();
    switch (f->kind) {
    case FieldKind::prime: return std::to_string(a.as_prime());
    case FieldKind::finite: return fp_to_string(a.as_finite(), f->gen_name);
    case FieldKind::rationals: {
        const BigRat& q = a.as_rat();
        std::ostringstream os;
        os << numerator(q);
        if (denominator(q) != 1) os << "/" << denominator(q);
        return os.str();
    }
    case FieldKind::ratfunc: {
        const Frac& x = a.as_frac();
        std::string n = mp_to_string(x.num, f->vars);
        if (x.den == mp_const(f->p, 1)) return n;
        if (x.num.t.size() > 1) n = "(" + n + ")";
        return n + "/(" + mp_to_string(x.den, f->vars) + ")";
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Scalar expression parser.

namespace {

struct Token {
    enum Kind { integer, name, op, end } kind;
    std::string text; // integer digits or variable name
    char c = 0;       // operator character
};

class Lexer {
public:
    Lexer(std::string_view s, std::vector<std::string> names) : s_(s), names_(std::move(names)) {
        // Longest declared name first so "u^2" beats "u".
        std::sort(names_.begin(), names_.end(),
                  [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
        advance();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, "", 0};
            return;
        }
        for (const auto& n : names_)
            if (s_.compare(i_, n.size(), n) == 0) {
                tok_ = {Token::name, n, 0};
                i_ += n.size();
                return;
            }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::integer, std::string(s_.substr(i_, j - i_)), 0};
            i_ = j;
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_ = {Token::op, "", c};
            ++i_;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            throw ParseError("unknown variable '" + std::string(s_.substr(i_, j - i_)) + "'");
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::vector<std::string> names_;
    size_t i_ = 0;
    Token tok_;
};

class ScalarParser {
public:
    ScalarParser(const Field& f, const std::string& text)
        : f_(f), lex_(text, declared_names(f)) {}

    Scalar parse() {
        Scalar v = expr();
        if (lex_.peek().kind != Token::end) throw ParseError("trailing input in scalar");
        return v;
    }

private:
    static std::vector<std::string> declared_names(const Field& f) {
        if (f->kind == FieldKind::ratfunc) return f->vars;
        if (f->kind == FieldKind::finite) return {f->gen_name};
        return {};
    }

    Scalar expr() {
        Scalar v = term();
        while (lex_.peek().kind == Token::op &&
               (lex_.peek().c == '+' || lex_.peek().c == '-')) {
            char c = lex_.take().c;
            Scalar w = term();
            v = c == '+' ? v + w : v - w;
        }
        return v;
    }

    Scalar term() {
        Scalar v = factor();
        while (lex_.peek().kind == Token::op &&
               (lex_.peek().c == '*' || lex_.peek().c == '/')) {
            char c = lex_.take().c;
            Scalar w = factor();
            v = c == '*' ? v * w : v / w;
        }
        return v;
    }

    Scalar factor() {
        if (lex_.peek().kind == Token::op && (lex_.peek().c == '-' || lex_.peek().c == '+')) {
            char c = lex_.take().c;
            Scalar v = factor();
            return c == '-' ? -v : v;
        }
        Scalar v = atom();
        if (lex_.peek().kind == Token::op && lex_.peek().c == '^') {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::integer)
                throw ParseError("exponent must be a nonnegative integer literal");
            long long e = std::stoll(t.text);
            v = v.pow(e);
        }
        return v;
    }

    Scalar atom() {
        Token t = lex_.take();
        if (t.kind == Token::integer) {
            BigInt n(t.text);
            if (f_->kind == FieldKind::rationals) return scalar_from_rat(f_, BigRat(n));
            return scalar_from_int_big(n);
        }
        if (t.kind == Token::name) {
            if (f_->kind == FieldKind::finite) return scalar_from_coords(f_, {0, 1});
            for (size_t i = 0; i < f_->vars.size(); ++i)
                if (f_->vars[i] == t.text)
                    return scalar_from_poly(f_, mp_var(f_->p, static_cast<int>(i)));
            throw ParseError("unknown variable '" + t.text + "'");
        }
        if (t.kind == Token::op && t.c == '(') {
            Scalar v = expr();
            Token close = lex_.take();
            if (close.kind != Token::op || close.c != ')') throw ParseError("expected ')'");
            return v;
        }
        throw ParseError("expected integer, variable, or '('");
    }

    Scalar scalar_from_int_big(const BigInt& n) {
        uint64_t r = mod_reduce(n, f_->p);
        if (f_->kind == FieldKind::prime) return {f_, r};
        if (f_->kind == FieldKind::finite) return scalar_from_coords(f_, {r});
        return scalar_from_poly(f_, mp_const(f_->p, r));
    }

    Field f_;
    Lexer lex_;
};

} // namespace

Scalar parse_scalar(const Field& f, const std::string& text) {
    return ScalarParser(f, text).parse();
}

Scalar frobenius(const Scalar& a) {
    const Field& f = a.field();
    if (f->p == 0) throw UnsupportedField("Frobenius needs positive characteristic");
    switch (f->kind) {
    case FieldKind::prime: return a;
    case FieldKind::finite: return a.pow(static_cast<long long>(f->p));
    case FieldKind::ratfunc: {
        // (sum c*m)^p = sum c*m^p over F_p.
        auto power_exps = [&](const MPoly& x) {
            MPoly r;
            r.p = x.p;
            for (const auto& [e, c] : x.t)
                r.t[{e.a * static_cast<uint32_t>(f->p), e.b * static_cast<uint32_t>(f->p)}] = c;
            return r;
        };
        const Frac& x = a.as_frac();
        return {f, frac_make(power_exps(x.num), power_exps(x.den))};
    }
    default: throw UnsupportedField("Frobenius on " + f->name());
    }
}

namespace {

// Univariate square root over F_p, odd p, by matching coefficients from the
// top; returns nullopt if f is not a perfect square.
std::optional<FpPoly> fp_poly_sqrt(const FpPoly& f, uint64_t p) {
    if (f.empty()) return FpPoly{};
    int n = fp_deg(f);
    if (n % 2) return std::nullopt;
    int d = n / 2;
    auto lead = mod_sqrt(f.back(), p);
    if (!lead) return std::nullopt;
    FpPoly g(d + 1, 0);
    g[d] = *lead;
    uint64_t inv2gd = mod_inv(mod_mul(2 % p, g[d], p), p);
    for (int i = d - 1; i >= 0; --i) {
        // Coefficient of x^{d+i} in g^2 with g_i still 0.
        uint64_t conv = 0;
        for (int j = i + 1; j <= d; ++j) {
            int k = d + i - j;
            if (k < 0 || k > d || k <= i) continue;
            conv = mod_add(conv, mod_mul(g[j], g[k], p), p);
        }
        uint64_t fi = (d + i < static_cast<int>(f.size())) ? f[d + i] : 0;
        g[i] = mod_mul(mod_sub(fi, conv, p), inv2gd, p);
    }
    FpPoly gg = fp_mul(g, g, p);
    if (gg != f) return std::nullopt;
    fp_normalize(g);
    return g;
}

// Square root of a bivariate polynomial over F_2: squaring doubles every
// exponent, so halve them if possible.
std::optional<MPoly> mp_sqrt_char2(const MPoly& f) {
    MPoly r;
    r.p = f.p;
    for (const auto& [e, c] : f.t) {
        if (e.a % 2 || e.b % 2) return std::nullopt;
        r.t[{e.a / 2, e.b / 2}] = c; // F_2 coefficients are their own roots
    }
    return r;
}

std::optional<MPoly> mp_sqrt(const MPoly& f, const Field& fld) {
    if (f.is_zero()) return MPoly{f.p, {}};
    if (fld->p == 2) return mp_sqrt_char2(f);
    if (fld->vars.size() == 1 || f.deg(1) == 0) {
        auto g = fp_poly_sqrt(mp_to_univariate(f, 0), fld->p);
        if (!g) return std::nullopt;
        return mp_from_univariate(f.p, *g, 0);
    }
    if (f.deg(0) == 0) {
        auto g = fp_poly_sqrt(mp_to_univariate(f, 1), fld->p);
        if (!g) return std::nullopt;
        return mp_from_univariate(f.p, *g, 1);
    }
    throw UnsupportedField("square roots in two-variable function fields of odd "
                           "characteristic are not implemented");
}

} // namespace

std::optional<Scalar> scalar_sqrt(const Scalar& a) {
    const Field& f = a.field();
    if (a.is_zero()) return scalar_zero(f);
    switch (f->kind) {
    case FieldKind::prime: {
        auto r = mod_sqrt(a.as_prime(), f->p);
        if (!r) return std::nullopt;
        return Scalar{f, *r};
    }
    case FieldKind::finite: {
        uint64_t q = *field_size(f);
        if (f->p == 2) return a.pow(static_cast<long long>(q / 2));
        // Tiny fields: scan. Guarded so a mistake cannot spin forever.
        if (q > (1u << 20)) throw SearchSpaceTooLarge("finite field too large for sqrt scan");
        FieldEnumerator en(f);
        Scalar x;
        while (en.next(x))
            if (x * x == a) return x;
        return std::nullopt;
    }
    case FieldKind::rationals: {
        const BigRat& q = a.as_rat();
        if (q < 0) return std::nullopt;
        auto n = exact_sqrt(numerator(q)), d = exact_sqrt(denominator(q));
        if (!n || !d) return std::nullopt;
        return Scalar{f, make_rat(*n, *d)};
    }
    case FieldKind::ratfunc: {
        const Frac& x = a.as_frac();
        auto n = mp_sqrt(x.num, f), d = mp_sqrt(x.den, f);
        if (!n || !d) return std::nullopt;
        return Scalar{f, frac_make(*n, *d)};
    }
    }
    return std::nullopt;
}

namespace {

// Polynomial solutions of s^2 + s = delta over F_2(vars): peel perfect-square
// leading monomials from the top. Complete for polynomial delta.
std::optional<MPoly> artin_schreier_poly_char2(const MPoly& delta) {
    MPoly rest = delta, s;
    s.p = delta.p;
    while (!rest.is_zero()) {
        Exp2 e = rest.lead_exp();
        if (e.a % 2 || e.b % 2) return std::nullopt;
        MPoly m = mp_monomial(rest.p, {e.a / 2, e.b / 2}, 1);
        s = mp_add(s, m);
        rest = mp_sub(rest, mp_add(mp_mul(m, m), m));
        if (!rest.is_zero() && !(rest.lead_exp() < e)) return std::nullopt; // no progress
    }
    return s;
}

} // namespace

std::vector<Scalar> quadratic_roots_in_field(const Scalar& b, const Scalar& c) {
    const Field& f = b.field();
    if (!same_field(f, c.field())) throw FieldMismatch("quadratic coefficients");
    if (auto q = field_size(f)) {
        if (*q > (1u << 20)) throw SearchSpaceTooLarge("field scan for quadratic roots");
        std::vector<Scalar> roots;
        FieldEnumerator en(f);
        Scalar t;
        while (en.next(t))
            if (t * t - b * t - c == scalar_zero(f)) roots.push_back(t);
        return roots;
    }
    if (f->p != 2) {
        Scalar four = scalar_from_int(f, 4), two = scalar_from_int(f, 2);
        Scalar disc = b * b + four * c;
        auto s = scalar_sqrt(disc);
        if (!s) return {};
        Scalar r1 = (b + *s) / two, r2 = (b - *s) / two;
        if (r1 == r2) return {r1};
        return {r1, r2};
    }
    // Characteristic 2, infinite field (ratfunc).
    if (b.is_zero()) {
        auto s = scalar_sqrt(c);
        if (!s) return {};
        return {*s};
    }
    // t = b*s turns t^2 - b*t - c = 0 into s^2 + s = c/b^2.
    Scalar delta = c / (b * b);
    const Frac& dv = delta.as_frac();
    if (!(dv.den == mp_const(f->p, 1)))
        throw UnsupportedField("Artin-Schreier solvability over function fields is decided "
                               "only for polynomial right-hand sides");
    auto s = artin_schreier_poly_char2(dv.num);
    if (!s) return {};
    Scalar s0 = scalar_from_poly(f, *s);
    Scalar r1 = b * s0, r2 = b * s0 + b;
    return {r1, r2};
}

bool quadratic_irreducible(const Scalar& b, const Scalar& c) {
    return quadratic_roots_in_field(b, c).empty();
}

std::vector<Scalar> char2_square_basis(const Field& f) {
    if (f->p != 2) throw UnsupportedField("square basis needs characteristic 2");
    switch (f->kind) {
    case FieldKind::prime:
    case FieldKind::finite:
        return {scalar_one(f)}; // finite fields of characteristic 2 are perfect
    case FieldKind::ratfunc: {
        std::vector<Scalar> basis = {scalar_one(f), scalar_from_poly(f, mp_var(2, 0))};
        if (f->vars.size() == 2) {
            basis.push_back(scalar_from_poly(f, mp_var(2, 1)));
            basis.push_back(scalar_from_poly(f, mp_mul(mp_var(2, 0), mp_var(2, 1))));
        }
        return basis;
    }
    default: throw UnsupportedField("square basis");
    }
}

std::vector<Scalar> char2_square_decompose(const Scalar& a) {
    const Field& f = a.field();
    if (f->p != 2) throw UnsupportedField("square decomposition needs characteristic 2");
    if (f->kind == FieldKind::prime) return {a}; // a = a^2 in F_2
    if (f->kind == FieldKind::finite) {
        uint64_t q = *field_size(f);
        return {a.pow(static_cast<long long>(q / 2))}; // inverse Frobenius
    }
    // a = n/d = (n*d)/d^2; split n*d by exponent parity, then each component
    // g_s^2 * m_s / d^2 contributes (g_s/d)^2 * m_s.
    const Frac& x = a.as_frac();
    MPoly nd = mp_mul(x.num, x.den);
    size_t parts = f->vars.size() == 2 ? 4 : 2;
    std::vector<MPoly> comp(parts);
    for (auto& c : comp) c.p = 2;
    for (const auto& [e, c] : nd.t) {
        size_t s = (e.a % 2) + (f->vars.size() == 2 ? 2 * (e.b % 2) : 0);
        comp[s].t[{e.a / 2, e.b / 2}] = c;
    }
    Scalar den{f, Frac{x.den, mp_const(2, 1)}};
    std::vector<Scalar> out;
    out.reserve(parts);
    for (auto& c : comp)
        out.push_back(Scalar{f, frac_make(c, mp_const(2, 1))} / den);
    return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, unsigned size) {
    switch (f->kind) {
    case FieldKind::prime: return {f, rng() % f->p};
    case FieldKind::finite: {
        FpPoly c(f->ext_deg);
        for (auto& x : c) x = rng() % f->p;
        fp_normalize(c);
        return {f, c};
    }
    case FieldKind::rationals: {
        long long span = 2 * static_cast<long long>(size) + 1;
        long long n = static_cast<long long>(rng() % span) - size;
        long long d = 1 + static_cast<long long>(rng() % size);
        return {f, make_rat(BigInt(n), BigInt(d))};
    }
    case FieldKind::ratfunc: {
        MPoly num;
        num.p = f->p;
        unsigned terms = 1 + rng() % (size + 1);
        for (unsigned t = 0; t < terms; ++t) {
            Exp2 e{static_cast<uint32_t>(rng() % (size + 1)),
                   f->vars.size() > 1 ? static_cast<uint32_t>(rng() % (size + 1)) : 0};
            uint64_t c = rng() % f->p;
            num = mp_add(num, mp_monomial(f->p, e, c));
        }
        return scalar_from_poly(f, num);
    }
    }
    throw UnsupportedField("random");
}

FieldEnumerator::FieldEnumerator(Field f) : f_(std::move(f)) {
    auto q = field_size(f_);
    if (!q) throw InfiniteField("enumeration of " + f_->name());
    total_ = *q;
}

bool FieldEnumerator::next(Scalar& out) {
    if (i_ >= total_) return false;
    uint64_t n = i_++;
    if (f_->kind == FieldKind::prime) {
        out = Scalar{f_, n};
        return true;
    }
    FpPoly c(f_->ext_deg);
    for (unsigned j = 0; j < f_->ext_deg; ++j) {
        c[j] = n % f_->p;
        n /= f_->p;
    }
    fp_normalize(c);
    out = Scalar{f_, c};
    return true;
}

std::vector<Scalar> enumerate_field(const Field& f, uint64_t limit) {
    FieldEnumerator en(f);
    if (en.size() > limit)
        throw SearchSpaceTooLarge(f->name() + " has " + std::to_string(en.size()) +
                                  " elements, limit " + std::to_string(limit));
    std::vector<Scalar> all;
    all.reserve(en.size());
    Scalar x;
    while (en.next(x)) all.push_back(x);
    return all;
}

Scalar FieldEmbedding::operator()(const Scalar& a) const {
    if (!same_field(a.field(), src)) throw FieldMismatch("embedding argument");
    FpPoly coords = src->kind == FieldKind::prime
                        ? FpPoly{a.as_prime()}
                        : a.as_finite();
    Scalar r = scalar_zero(dst);
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) r += scalar_from_int(dst, static_cast<long long>(coords[i])) *
                            gen_power_images.at(i);
    return r;
}

FieldEmbedding embed_finite_field(const Field& src, const Field& dst) {
    if (!field_size(src) || !field_size(dst))
        throw UnsupportedField("finite-field embedding of infinite fields");
    if (src->p != dst->p) throw FieldMismatch("embedding across characteristics");
    unsigned ms = src->kind == FieldKind::prime ? 1 : src->ext_deg;
    unsigned md = dst->kind == FieldKind::prime ? 1 : dst->ext_deg;
    if (md % ms) throw UnsupportedField("no embedding: degree does not divide");
    FieldEmbedding e{src, dst, {}};
    if (ms == 1) {
        e.gen_power_images = {scalar_one(dst)};
        return e;
    }
    // Deterministic root of src's modulus in dst.
    FieldEnumerator en(dst);
    Scalar x;
    while (en.next(x)) {
        Scalar acc = scalar_zero(dst);
        for (size_t i = src->modulus.size(); i-- > 0;)
            acc = acc * x + scalar_from_int(dst, static_cast<long long>(src->modulus[i]));
        if (acc.is_zero()) {
            e.gen_power_images.resize(ms);
            for (unsigned i = 0; i < ms; ++i) e.gen_power_images[i] = x.pow(i);
            return e;
        }
    }
    throw Inconsistent("modulus has no root in the target field (unreachable)");
}

} // namespace tamecurve
