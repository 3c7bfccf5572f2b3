#include "arcmot/field.hpp"

namespace arcmot {

bool is_prime_u64(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientField CoefficientField::prime(unsigned long p) {
    if (!is_prime_u64(p)) throw precondition_error("characteristic " + std::to_string(p) + " is not prime");
    return CoefficientField(Kind::Prime, p);
}

mpq_class CoefficientField::normalize(const mpq_class& x) const {
    if (kind_ == Kind::Rationals) {
        mpq_class r = x;
        r.canonicalize();
        return r;
    }
    // F_p: num * den^{-1} mod p, den invertible since gcd(den, p) = 1 unless p | den.
    mpq_class r = x;
    r.canonicalize();
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class den = r.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw precondition_error("denominator not invertible mod " + std::to_string(p_));
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw precondition_error("denominator not invertible mod " + std::to_string(p_));
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    mpz_class res = (num * deninv) % p;
    if (res < 0) res += p;
    return mpq_class(res);
}

mpq_class CoefficientField::inv(const mpq_class& a) const {
    mpq_class x = normalize(a);
    if (x == 0) throw precondition_error("division by zero in coefficient field");
    if (kind_ == Kind::Rationals) return mpq_class(1) / x;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class v = x.get_num();
    mpz_class vinv;
    mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    if (vinv < 0) vinv += p;
    return mpq_class(vinv);
}

std::string CoefficientField::to_string() const {
    if (kind_ == Kind::Rationals) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

}  // namespace arcmot
