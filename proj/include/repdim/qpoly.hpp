#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace repdim::qpoly {

// Dense univariate polynomial over Q, coefficients low degree first,
// no trailing zero coefficient (zero polynomial = empty vector).
using QPoly = std::vector<mpq_class>;

int degree(const QPoly& f);  // -1 for the zero polynomial
void trim(QPoly& f);
bool is_zero(const QPoly& f);
bool equal(const QPoly& f, const QPoly& g);

QPoly from_ints(std::vector<long> coeffs);
QPoly constant(const mpq_class& c);

QPoly add(const QPoly& f, const QPoly& g);
QPoly sub(const QPoly& f, const QPoly& g);
QPoly mul(const QPoly& f, const QPoly& g);
QPoly scale(const QPoly& f, const mpq_class& c);
// quotient/remainder, g != 0
std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g);
QPoly monic(const QPoly& f);
QPoly gcd(const QPoly& f, const QPoly& g);  // monic (or zero)
// g = gcd(f,g) = s*f + t*g with g monic
struct ExtGcd {
    QPoly g, s, t;
};
ExtGcd ext_gcd(const QPoly& f, const QPoly& g);
QPoly derivative(const QPoly& f);
mpq_class eval(const QPoly& f, const mpq_class& x);

// Irreducible factorization over Q. Factors are monic; unit is the leading
// coefficient of f, so f = unit * prod factors^multiplicity.
struct FactorList {
    mpq_class unit;
    std::vector<std::pair<QPoly, int>> factors;
};
FactorList factor(const QPoly& f);
bool is_irreducible(const QPoly& f);

// n-th cyclotomic polynomial (monic, integer coefficients).
QPoly cyclotomic(unsigned n);

// --- arithmetic mod a small prime -------------------------------------
// Monic-normalized dense polynomials over F_p, used by the Zassenhaus
// path and exported for factoring center minimal polynomials over F_p.
using PPoly = std::vector<std::uint64_t>;

struct PFactorList {
    std::uint64_t unit;
    std::vector<std::pair<PPoly, int>> factors;  // monic irreducible
};
PFactorList factor_mod_p(const PPoly& f, std::uint64_t p);

}  // namespace repdim::qpoly
