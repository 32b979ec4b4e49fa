#pragma once

// Exact arithmetic in prime fields F_q and the modular-order checks that
// gate every dihedral construction.

#include <cstdint>
#include <ostream>

#include "dcodes/errors.hpp"

namespace dcodes {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
/// Euler's totient; only prime powers p^j are needed here but any n works.
std::uint64_t euler_phi(std::uint64_t n);

/// Smallest k >= 1 with q^k = 1 (mod n). n = 1 gives 1.
/// Throws InadmissibleParameters when gcd(q, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

/// True iff gcd(2p^m, q) = 1 and q has order phi(p^m) modulo p^m.
/// Never throws; malformed input (m = 0, p even or composite, q composite)
/// is simply not admissible.
bool check_admissible(std::uint64_t q, std::uint64_t p, unsigned m);

/// The prime field Z/qZ. Only the modulus is stored, so the type is a cheap
/// value that elements carry around for mismatch detection.
class PrimeField {
public:
    /// Throws InadmissibleParameters unless q is prime and below 2^31.
    explicit PrimeField(std::uint64_t q);

    Residue modulus() const { return q_; }

    Residue reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<Residue>(r < 0 ? r + q_ : r);
    }
    Residue add(Residue x, Residue y) const {
        Residue s = x + y;
        return s >= q_ ? s - q_ : s;
    }
    Residue sub(Residue x, Residue y) const { return x >= y ? x - y : x + q_ - y; }
    Residue neg(Residue x) const { return x == 0 ? 0 : q_ - x; }
    Residue mul(Residue x, Residue y) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % q_);
    }
    Residue pow(Residue x, std::uint64_t e) const;
    /// Throws NotInvertible for 0.
    Residue inv(Residue x) const;

    bool operator==(const PrimeField&) const = default;

private:
    Residue q_;
};

/// A residue tagged with its field.
class FieldElem {
public:
    FieldElem(PrimeField field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    Residue value() const { return value_; }
    const PrimeField& field() const { return field_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const { return FieldElem(field_, field_.neg(value_)); }
    FieldElem inv() const;

    bool operator==(const FieldElem& o) const { return field_ == o.field_ && value_ == o.value_; }

private:
    void require_same(const FieldElem& o) const;

    PrimeField field_;
    Residue value_;
};

inline FieldElem add(const FieldElem& x, const FieldElem& y) { return x + y; }
inline FieldElem mul(const FieldElem& x, const FieldElem& y) { return x * y; }
inline FieldElem inv(const FieldElem& x) { return x.inv(); }

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace dcodes
