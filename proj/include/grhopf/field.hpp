#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grhopf/error.hpp"

namespace grhopf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Description of a supported coefficient field: GF(p), GF(p,n) or the
/// rationals (characteristic 0).
struct FieldSpec {
    long characteristic = 0;   // 0 means the rationals
    int extension_degree = 1;  // always 1 in characteristic 0
    // Monic irreducible over GF(p), coefficients c[0] + c[1] x + ... + c[n] x^n,
    // only meaningful when extension_degree > 1.
    std::vector<long> modulus;

    bool operator==(const FieldSpec& o) const {
        return characteristic == o.characteristic &&
               extension_degree == o.extension_degree && modulus == o.modulus;
    }
    bool is_rational() const { return characteristic == 0; }
    std::string str() const;
};

/// Element payload; interpretation depends on the owning Field.
/// prime field: single residue in v; extension field: residue vector of
/// length extension_degree; char 0: exact rational.
struct FElem {
    long v = 0;
    std::vector<long> c;
    Rational q;
};

/// Arithmetic context for one exact field. Immutable; elements are plain
/// values operated on through the context.
class Field {
  public:
    explicit Field(FieldSpec spec);

    static std::shared_ptr<const Field> rationals();
    static std::shared_ptr<const Field> gf(long p, int n = 1);
    static std::shared_ptr<const Field> make(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    long characteristic() const { return spec_.characteristic; }
    int extension_degree() const { return spec_.extension_degree; }
    bool is_rational() const { return spec_.is_rational(); }
    /// Number of elements, 0 for the rationals.
    long order() const;

    FElem zero() const;
    FElem one() const;
    FElem from_int(long v) const;
    FElem from_rational(const Rational& r) const;
    /// Element given by polynomial coefficients in the field generator
    /// (char p only; coefficients reduced mod p).
    FElem from_coeffs(const std::vector<long>& coeffs) const;

    FElem add(const FElem& a, const FElem& b) const;
    FElem sub(const FElem& a, const FElem& b) const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem neg(const FElem& a) const;
    FElem inv(const FElem& a) const;  // throws on zero
    FElem div(const FElem& a, const FElem& b) const;
    FElem pow(const FElem& a, long e) const;  // e may be negative

    bool is_zero(const FElem& a) const;
    bool is_one(const FElem& a) const;
    bool eq(const FElem& a, const FElem& b) const;
    /// Deterministic total order (enumeration index in char p, numeric in char 0).
    bool less(const FElem& a, const FElem& b) const;

    /// x -> x^(p^m); unsupported in characteristic 0.
    FElem frobenius_iterate(const FElem& a, int m) const;

    /// Enumeration of a finite field, index in [0, order).
    FElem element_at(long index) const;
    long index_of(const FElem& a) const;

    std::string str(const FElem& a) const;

  private:
    FieldSpec spec_;
    std::vector<long> reduce_poly(std::vector<long> v) const;
    FElem canon(FElem e) const;
};

using FieldPtr = std::shared_ptr<const Field>;

/// x^(p^m) for any value type with multiplication through a context; used for
/// field elements here and algebra elements in gralg.
template <typename Elem, typename MulFn>
Elem frobenius_power(Elem x, long p, int m, MulFn mul) {
    for (int i = 0; i < m; ++i) {
        // x <- x^p by square and multiply
        Elem result = x;
        Elem base = x;
        bool started = false;
        long e = p;
        while (e > 0) {
            if (e & 1) {
                result = started ? mul(result, base) : base;
                started = true;
            }
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        x = result;
    }
    return x;
}

}  // namespace grhopf
