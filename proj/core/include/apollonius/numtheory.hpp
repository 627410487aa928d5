#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace apollo::nt {

bool is_probable_prime(const mpz_class& n);

// Exact integer square root; nullopt when n is negative or not a perfect square.
std::optional<mpz_class> exact_sqrt(const mpz_class& n);

struct Factorization {
  std::vector<std::pair<mpz_class, int>> primes;  // ascending
  std::vector<mpz_class> unresolved;              // composite cofactors the budget could not split

  bool complete() const { return unresolved.empty(); }
};

// Factors |n| (n != 0) by trial division, perfect-power stripping and
// Pollard-Brent rho. Results are memoised process-wide.
Factorization factor(const mpz_class& n);

// Signed square-free representative of the square class of a nonzero rational.
struct SquareClass {
  mpz_class rep;                  // square-free, sign carried
  std::vector<mpz_class> primes;  // primes dividing rep, ascending
  std::vector<mpz_class> unresolved;
  bool complete() const { return unresolved.empty(); }
};

SquareClass square_class(const mpq_class& q);

// Legendre symbol (a/p) for an odd prime p; returns 0 when p | a.
int legendre(const mpz_class& a, const mpz_class& p);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t invmod(std::int64_t a, std::int64_t p);
std::int64_t normmod(const mpz_class& a, std::int64_t p);

// Tonelli-Shanks; nullopt for non-residues. Deterministic output.
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);

// Least quadratic non-residue modulo the odd prime p.
std::int64_t least_nonresidue(std::int64_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace apollo::nt
