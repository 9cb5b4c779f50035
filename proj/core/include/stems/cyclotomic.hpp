#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace stems {

// An element of Z[x]/(x^N - 1), used as a container for sums of roots of
// unity. Equality with a rational integer is decided exactly by reduction
// modulo the N-th cyclotomic polynomial, so character averages are verified
// integral instead of being trusted to floating point.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int modulus);

    int modulus() const { return modulus_; }

    // zeta_N^e (e taken mod N).
    static CyclotomicInt root_power(int modulus, long long e);
    static CyclotomicInt integer(int modulus, long long v);

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    CyclotomicInt& scale(long long k);

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

    // The rational integer this element equals, if it equals one.
    std::optional<long long> try_integer() const;
    long long to_integer() const; // throws when try_integer is empty

private:
    int modulus_;
    std::vector<long long> coeffs_; // coefficient of x^j at index j
};

// Coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

} // namespace stems
