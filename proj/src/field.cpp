#include "grhopf/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace grhopf {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mod_inv(long a, long p) {
    // extended Euclid on longs
    long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) throw internal_error("mod_inv: not invertible");
    return mod_pos(t, p);
}

// --- dense polynomial arithmetic over GF(p), used for modulus search and
// --- extension-field elements; coefficient index = exponent.

using PolyP = std::vector<long>;

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mul(const PolyP& a, const PolyP& b, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_pos(r[i + j] + a[i] * b[j], p);
    }
    trim(r);
    return r;
}

PolyP poly_mod(PolyP a, const PolyP& m, long p) {
    trim(a);
    long lead_inv = mod_inv(m.back(), p);
    while (a.size() >= m.size()) {
        long c = mod_pos(a.back() * lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_pos(a[shift + i] - c * m[i], p);
        trim(a);
    }
    return a;
}

PolyP poly_powmod(PolyP base, BigInt e, const PolyP& m, long p) {
    PolyP r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(poly_mul(r, base, p), m, p);
        e >>= 1;
        if (e > 0) base = poly_mod(poly_mul(base, base, p), m, p);
    }
    return r;
}

PolyP poly_gcd(PolyP a, PolyP b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long li = mod_inv(a.back(), p);
        for (auto& c : a) c = mod_pos(c * li, p);
    }
    return a;
}

PolyP poly_sub(PolyP a, const PolyP& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_pos(a[i] - b[i], p);
    trim(a);
    return a;
}

bool poly_irreducible(const PolyP& f, long p) {
    // f monic of degree n: irreducible iff x^(p^n) = x mod f and
    // gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
    int n = int(f.size()) - 1;
    if (n <= 0) return false;
    PolyP x = {0, 1};
    BigInt pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    PolyP xq = poly_powmod(x, pn, f, p);
    if (poly_sub(xq, x, p) != PolyP{}) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rprime = is_prime(r);
        if (!rprime) continue;
        BigInt pd = 1;
        for (int i = 0; i < n / r; ++i) pd *= p;
        PolyP xd = poly_powmod(x, pd, f, p);
        PolyP g = poly_gcd(poly_sub(xd, x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Deterministic modulus for GF(p,n): the monic irreducible of degree n whose
// lower-coefficient vector, read as a base-p number, is smallest.
PolyP default_modulus(long p, int n) {
    BigInt total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (BigInt v = 0; v < total; ++v) {
        PolyP f(n + 1, 0);
        BigInt t = v;
        for (int i = 0; i < n; ++i) {
            f[i] = long(t % p);
            t /= p;
        }
        f[n] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible modulus found");
}

PolyP extended_inv(const PolyP& a, const PolyP& m, long p) {
    // inverse of a mod m via extended Euclid
    PolyP r0 = m, r1 = a, s0 = {}, s1 = {1};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        PolyP q;
        PolyP rem = r0;
        trim(rem);
        long li = mod_inv(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long c = mod_pos(rem.back() * li, p);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_pos(rem[shift + i] - c * r1[i], p);
            trim(rem);
        }
        PolyP s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw internal_error("field element not invertible");
    long li = mod_inv(r0[0], p);
    for (auto& c : s0) c = mod_pos(c * li, p);
    s0 = poly_mod(std::move(s0), m, p);
    return s0;
}

}  // namespace

std::string FieldSpec::str() const {
    if (characteristic == 0) return "QQ";
    std::ostringstream os;
    os << "GF(" << characteristic;
    if (extension_degree > 1) os << "," << extension_degree;
    os << ")";
    return os.str();
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.characteristic == 0) {
        if (spec_.extension_degree != 1)
            throw input_error("rational field cannot carry an extension degree");
        spec_.modulus.clear();
        return;
    }
    if (!is_prime(spec_.characteristic))
        throw input_error("field characteristic must be 0 or prime, got " +
                          std::to_string(spec_.characteristic));
    if (spec_.extension_degree < 1)
        throw input_error("extension degree must be positive");
    if (spec_.extension_degree == 1) {
        spec_.modulus.clear();
        return;
    }
    if (spec_.modulus.empty()) {
        spec_.modulus = default_modulus(spec_.characteristic, spec_.extension_degree);
    } else {
        if (int(spec_.modulus.size()) != spec_.extension_degree + 1 ||
            spec_.modulus.back() != 1)
            throw input_error("modulus must be monic of degree = extension degree");
        for (auto& c : spec_.modulus) c = mod_pos(c, spec_.characteristic);
        if (!poly_irreducible(spec_.modulus, spec_.characteristic))
            throw input_error("modulus polynomial is reducible");
    }
}

std::shared_ptr<const Field> Field::rationals() {
    static std::shared_ptr<const Field> f = std::make_shared<Field>(FieldSpec{0, 1, {}});
    return f;
}

std::shared_ptr<const Field> Field::gf(long p, int n) {
    return std::make_shared<Field>(FieldSpec{p, n, {}});
}

std::shared_ptr<const Field> Field::make(const FieldSpec& spec) {
    if (spec.characteristic == 0) return rationals();
    return std::make_shared<Field>(spec);
}

long Field::order() const {
    if (is_rational()) return 0;
    long q = 1;
    for (int i = 0; i < spec_.extension_degree; ++i) q *= spec_.characteristic;
    return q;
}

FElem Field::canon(FElem e) const {
    if (is_rational()) {
        e.c.clear();
        e.v = 0;
        return e;
    }
    long p = spec_.characteristic;
    if (spec_.extension_degree == 1) {
        if (!e.c.empty()) {
            e.v = e.c[0];
            e.c.clear();
        }
        e.v = mod_pos(e.v, p);
        e.q = 0;
        return e;
    }
    for (auto& c : e.c) c = mod_pos(c, p);
    if (int(e.c.size()) > spec_.extension_degree) {
        PolyP r = poly_mod(e.c, spec_.modulus, p);
        e.c = std::move(r);
    }
    e.c.resize(spec_.extension_degree, 0);
    e.v = 0;
    e.q = 0;
    return e;
}

FElem Field::zero() const { return from_int(0); }
FElem Field::one() const { return from_int(1); }

FElem Field::from_int(long v) const {
    FElem e;
    if (is_rational()) {
        e.q = v;
        return e;
    }
    if (spec_.extension_degree == 1) {
        e.v = mod_pos(v, spec_.characteristic);
        return e;
    }
    e.c.assign(spec_.extension_degree, 0);
    e.c[0] = mod_pos(v, spec_.characteristic);
    return e;
}

FElem Field::from_rational(const Rational& r) const {
    FElem e;
    if (is_rational()) {
        e.q = r;
        return e;
    }
    long p = spec_.characteristic;
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    long nm = long(num % p);
    long dm = long(den % p);
    if (dm == 0) throw input_error("denominator not invertible modulo " + std::to_string(p));
    long value = mod_pos(mod_pos(nm, p) * mod_inv(dm, p), p);
    if (spec_.extension_degree == 1) {
        e.v = value;
        return e;
    }
    e.c.assign(spec_.extension_degree, 0);
    e.c[0] = value;
    return e;
}

FElem Field::from_coeffs(const std::vector<long>& coeffs) const {
    if (is_rational()) throw input_error("coefficient vectors require a finite field");
    FElem e;
    e.c = coeffs;
    if (e.c.empty()) e.c.push_back(0);
    return canon(std::move(e));
}

FElem Field::add(const FElem& a, const FElem& b) const {
    FElem e;
    if (is_rational()) {
        e.q = a.q + b.q;
        return e;
    }
    if (spec_.extension_degree == 1) {
        e.v = mod_pos(a.v + b.v, spec_.characteristic);
        return e;
    }
    e.c.resize(spec_.extension_degree);
    for (int i = 0; i < spec_.extension_degree; ++i)
        e.c[i] = mod_pos(a.c[i] + b.c[i], spec_.characteristic);
    return e;
}

FElem Field::sub(const FElem& a, const FElem& b) const { return add(a, neg(b)); }

FElem Field::mul(const FElem& a, const FElem& b) const {
    FElem e;
    if (is_rational()) {
        e.q = a.q * b.q;
        return e;
    }
    if (spec_.extension_degree == 1) {
        e.v = mod_pos(a.v * b.v, spec_.characteristic);
        return e;
    }
    PolyP r = poly_mul(a.c, b.c, spec_.characteristic);
    r = poly_mod(std::move(r), spec_.modulus, spec_.characteristic);
    e.c = std::move(r);
    e.c.resize(spec_.extension_degree, 0);
    return e;
}

FElem Field::neg(const FElem& a) const {
    FElem e;
    if (is_rational()) {
        e.q = -a.q;
        return e;
    }
    if (spec_.extension_degree == 1) {
        e.v = mod_pos(-a.v, spec_.characteristic);
        return e;
    }
    e.c.resize(spec_.extension_degree);
    for (int i = 0; i < spec_.extension_degree; ++i)
        e.c[i] = mod_pos(-a.c[i], spec_.characteristic);
    return e;
}

FElem Field::inv(const FElem& a) const {
    if (is_zero(a)) throw internal_error("division by zero");
    FElem e;
    if (is_rational()) {
        e.q = 1 / a.q;
        return e;
    }
    if (spec_.extension_degree == 1) {
        e.v = mod_inv(a.v, spec_.characteristic);
        return e;
    }
    PolyP ac = a.c;
    trim(ac);
    e.c = extended_inv(ac, spec_.modulus, spec_.characteristic);
    e.c.resize(spec_.extension_degree, 0);
    return e;
}

FElem Field::div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }

FElem Field::pow(const FElem& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    FElem r = one();
    FElem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

bool Field::is_zero(const FElem& a) const {
    if (is_rational()) return a.q == 0;
    if (spec_.extension_degree == 1) return a.v == 0;
    return std::all_of(a.c.begin(), a.c.end(), [](long c) { return c == 0; });
}

bool Field::is_one(const FElem& a) const { return eq(a, one()); }

bool Field::eq(const FElem& a, const FElem& b) const {
    if (is_rational()) return a.q == b.q;
    if (spec_.extension_degree == 1) return a.v == b.v;
    return a.c == b.c;
}

bool Field::less(const FElem& a, const FElem& b) const {
    if (is_rational()) return a.q < b.q;
    return index_of(a) < index_of(b);
}

FElem Field::frobenius_iterate(const FElem& a, int m) const {
    if (is_rational())
        throw Error(ErrorKind::input,
                    "frobenius_iterate is unsupported in characteristic 0");
    return frobenius_power(a, spec_.characteristic, m,
                           [this](const FElem& x, const FElem& y) { return mul(x, y); });
}

FElem Field::element_at(long index) const {
    if (is_rational()) throw internal_error("cannot enumerate the rationals");
    FElem e;
    long p = spec_.characteristic;
    if (spec_.extension_degree == 1) {
        e.v = mod_pos(index, p);
        return e;
    }
    e.c.resize(spec_.extension_degree);
    for (int i = 0; i < spec_.extension_degree; ++i) {
        e.c[i] = index % p;
        index /= p;
    }
    return e;
}

long Field::index_of(const FElem& a) const {
    if (is_rational()) throw internal_error("cannot enumerate the rationals");
    if (spec_.extension_degree == 1) return a.v;
    long idx = 0;
    for (int i = spec_.extension_degree - 1; i >= 0; --i)
        idx = idx * spec_.characteristic + a.c[i];
    return idx;
}

std::string Field::str(const FElem& a) const {
    if (is_rational()) {
        std::ostringstream os;
        os << a.q;
        return os.str();
    }
    if (spec_.extension_degree == 1) return std::to_string(a.v);
    // polynomial in the field generator z, highest power first
    std::ostringstream os;
    bool any = false;
    for (int i = spec_.extension_degree - 1; i >= 0; --i) {
        if (a.c[i] == 0) continue;
        if (any) os << "+";
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i > 0) {
            if (a.c[i] != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

}  // namespace grhopf
