#pragma once

#include <cstdint>
#include <vector>

// Dense univariate polynomials over F_p, coefficients low-to-high, always
// trimmed so that the last coefficient is nonzero (the zero polynomial is
// empty). Used for building and checking field moduli and for inversion in
// F_p[z]/(f).
namespace pcov::fp_poly {

using Poly = std::vector<int>;

bool is_prime(int n);

int mod(long long a, int p);
int inv_mod(int a, int p);

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero

Poly add(const Poly& a, const Poly& b, int p);
Poly sub(const Poly& a, const Poly& b, int p);
Poly mul(const Poly& a, const Poly& b, int p);
Poly rem(const Poly& a, const Poly& m, int p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m, int p);
Poly monic(const Poly& f, int p);
Poly gcd(Poly a, Poly b, int p);

/// Inverse of a modulo m; empty result when gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m, int p);

/// Irreducibility of a polynomial of degree e >= 1, via
/// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= e/2.
bool is_irreducible(const Poly& f, int p);

/// First monic irreducible polynomial of the given degree, enumerating the
/// lower coefficients as base-p digits (coefficient 0 least significant).
/// Degree 1 returns x.
Poly first_irreducible(int p, int degree);

}  // namespace pcov::fp_poly
