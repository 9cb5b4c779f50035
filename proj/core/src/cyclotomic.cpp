#include "stems/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace stems {

namespace {

// Exact division of integer polynomials, used to peel cyclotomic factors off
// x^n - 1. Throws if the division leaves a remainder.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    if (den.empty() || den.back() == 0) throw std::logic_error("poly_div_exact: bad divisor");
    if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        long long lead = num[i + den.size() - 1];
        if (lead % den.back() != 0) throw std::logic_error("poly_div_exact: not divisible");
        long long q = lead / den.back();
        quot[i] = q;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long long>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");

    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    return memo.emplace(n, std::move(poly)).first->second;
}

CyclotomicInt::CyclotomicInt(int modulus) : modulus_(modulus), coeffs_(modulus, 0) {
    if (modulus < 1) throw std::invalid_argument("CyclotomicInt: modulus must be >= 1");
}

CyclotomicInt CyclotomicInt::root_power(int modulus, long long e) {
    CyclotomicInt c(modulus);
    long long r = e % modulus;
    if (r < 0) r += modulus;
    c.coeffs_[static_cast<std::size_t>(r)] = 1;
    return c;
}

CyclotomicInt CyclotomicInt::integer(int modulus, long long v) {
    CyclotomicInt c(modulus);
    c.coeffs_[0] = v;
    return c;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (o.modulus_ != modulus_) throw std::invalid_argument("CyclotomicInt: modulus mismatch");
    for (int j = 0; j < modulus_; ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    if (o.modulus_ != modulus_) throw std::invalid_argument("CyclotomicInt: modulus mismatch");
    for (int j = 0; j < modulus_; ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
}

CyclotomicInt& CyclotomicInt::scale(long long k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

std::optional<long long> CyclotomicInt::try_integer() const {
    // Reduce modulo the minimal polynomial of zeta_N; the element is a
    // rational integer exactly when the remainder is constant.
    const auto& phi = cyclotomic_polynomial(modulus_);
    std::vector<long long> rem = coeffs_;
    for (std::size_t i = rem.size(); i-- > 0;) {
        if (i + 1 < phi.size()) break; // remaining degree is below deg(phi)
        long long q = rem[i];          // phi is monic
        if (q == 0) continue;
        std::size_t base = i - (phi.size() - 1);
        for (std::size_t j = 0; j < phi.size(); ++j) rem[base + j] -= q * phi[j];
    }
    for (std::size_t j = 1; j < rem.size(); ++j)
        if (rem[j] != 0) return std::nullopt;
    return rem[0];
}

long long CyclotomicInt::to_integer() const {
    auto v = try_integer();
    if (!v) throw std::logic_error("CyclotomicInt: not a rational integer");
    return *v;
}

} // namespace stems
