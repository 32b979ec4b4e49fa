#include "dcodes/ff.hpp"

#include <string>

namespace dcodes {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw InadmissibleParameters("multiplicative order modulo 0 is undefined");
    if (gcd(q, n) != 1) {
        throw InadmissibleParameters("gcd(" + std::to_string(q) + ", " + std::to_string(n) +
                                     ") != 1");
    }
    if (n == 1) return 1;
    const unsigned __int128 mod = n;
    const unsigned __int128 base = q % n;
    unsigned __int128 acc = base;
    std::uint64_t k = 1;
    while (acc != 1) {
        acc = acc * base % mod;
        ++k;
    }
    return k;
}

bool check_admissible(std::uint64_t q, std::uint64_t p, unsigned m) {
    if (m < 1 || p < 3 || !is_prime(p) || !is_prime(q)) return false;
    const std::uint64_t pm = ipow(p, m);
    if (gcd(2 * pm, q) != 1) return false;
    return multiplicative_order(q, pm) == euler_phi(pm);
}

PrimeField::PrimeField(std::uint64_t q) {
    if (q >= (1ULL << 31) || !is_prime(q)) {
        throw InadmissibleParameters("field modulus " + std::to_string(q) +
                                     " is not a prime below 2^31");
    }
    q_ = static_cast<Residue>(q);
}

Residue PrimeField::pow(Residue x, std::uint64_t e) const {
    Residue r = 1 % q_;
    Residue b = x % q_;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Residue PrimeField::inv(Residue x) const {
    if (x % q_ == 0) throw NotInvertible("division by zero in F_" + std::to_string(q_));
    return pow(x, q_ - 2);
}

void FieldElem::require_same(const FieldElem& o) const {
    if (!(field_ == o.field_)) {
        throw MismatchError("field mismatch: F_" + std::to_string(field_.modulus()) + " vs F_" +
                            std::to_string(o.field_.modulus()));
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(o);
    return FieldElem(field_, field_.add(value_, o.value_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(o);
    return FieldElem(field_, field_.sub(value_, o.value_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(o);
    return FieldElem(field_, field_.mul(value_, o.value_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same(o);
    return FieldElem(field_, field_.mul(value_, field_.inv(o.value_)));
}

FieldElem FieldElem::inv() const { return FieldElem(field_, field_.inv(value_)); }

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    return os << x.value() << " (mod " << x.field().modulus() << ")";
}

}  // namespace dcodes
