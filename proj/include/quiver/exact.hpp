#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quiver {

// Field of rational numbers with exact arithmetic (GMP mpq).
struct Rationals {
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const {
        return Element(static_cast<long>(v));
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element div(const Element& a, const Element& b) const {
        if (b == 0) throw std::domain_error("Rationals: division by zero");
        return a / b;
    }
    Element inv(const Element& a) const { return div(one(), a); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    bool operator==(const Rationals&) const { return true; }
};

// Prime field F_p with elements stored as residues in [0, p).
class PrimeField {
public:
    using Element = long long;

    explicit PrimeField(long long p) : p_(p) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be prime");
    }

    long long modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element from_int(long long v) const {
        long long r = v % p_;
        return r < 0 ? r + p_ : r;
    }

    Element add(Element a, Element b) const { return (a + b) % p_; }
    Element sub(Element a, Element b) const { return ((a - b) % p_ + p_) % p_; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("PrimeField: division by zero");
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return from_int(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    long long p_;
};

}  // namespace quiver
