#include "apollonius/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace apollo::nt {

namespace {

constexpr unsigned long kTrialBound = 1u << 15;
constexpr std::uint64_t kRhoBudget = 1u << 21;

std::vector<unsigned long> small_primes() {
  std::vector<bool> sieve(kTrialBound + 1, true);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= kTrialBound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
  }
  return out;
}

const std::vector<unsigned long>& primes_table() {
  static const std::vector<unsigned long> table = small_primes();
  return table;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
mpz_class brent(const mpz_class& n, unsigned long c, std::uint64_t budget) {
  mpz_class y = 2, x, q = 1, g = 1, ys, t;
  std::uint64_t r = 1, spent = 0;
  const std::uint64_t m = 128;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      y = (y * y + c) % n;
    }
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        t = x - y;
        q = (q * abs(t)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      spent += lim;
    }
    r *= 2;
    if (spent > budget) return 0;
  } while (g == 1);
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      t = x - ys;
      t = abs(t);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void split(const mpz_class& n, int mult, std::map<mpz_class, int>& acc,
           std::vector<mpz_class>& unresolved) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    acc[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split(root, mult * static_cast<int>(k), acc, unresolved);
        return;
      }
    }
  }
  for (unsigned long c = 1; c <= 8; ++c) {
    mpz_class d = brent(n, c, kRhoBudget);
    if (d != 0) {
      mpz_class e = n / d;
      split(d, mult, acc, unresolved);
      split(e, mult, acc, unresolved);
      return;
    }
  }
  for (int i = 0; i < mult; ++i) unresolved.push_back(n);
}

Factorization factor_uncached(mpz_class n) {
  n = abs(n);
  std::map<mpz_class, int> acc;
  Factorization out;
  for (unsigned long p : primes_table()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    acc[mpz_class(p)] += e;
  }
  split(n, 1, acc, out.unresolved);
  for (auto& [p, e] : acc) out.primes.emplace_back(p, e);
  return out;
}

}  // namespace

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Factorization factor(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  static std::mutex mu;
  static std::map<mpz_class, Factorization> cache;
  const mpz_class key = abs(n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Factorization f = factor_uncached(key);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 100000) cache.clear();
  cache.emplace(key, f);
  return f;
}

SquareClass square_class(const mpq_class& q) {
  if (q == 0) throw std::invalid_argument("square_class: zero");
  SquareClass out;
  out.rep = sgn(q);
  for (const mpz_class* part : {&q.get_num(), &q.get_den()}) {
    if (abs(*part) == 1) continue;
    Factorization f = factor(*part);
    for (auto& [p, e] : f.primes) {
      if (e % 2 == 1) {
        out.rep *= p;
        out.primes.push_back(p);
      }
    }
    for (auto& u : f.unresolved) {
      out.rep *= u;
      out.unresolved.push_back(u);
    }
  }
  std::sort(out.primes.begin(), out.primes.end());
  // A prime can appear once in the numerator and once in the denominator.
  std::vector<mpz_class> dedup;
  for (std::size_t i = 0; i < out.primes.size(); ++i) {
    if (i + 1 < out.primes.size() && out.primes[i] == out.primes[i + 1]) {
      out.rep /= out.primes[i] * out.primes[i];
      ++i;
      continue;
    }
    dedup.push_back(out.primes[i]);
  }
  out.primes = std::move(dedup);
  return out;
}

int legendre(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t base = ((a % p) + p) % p, acc = 1 % p;
  while (e != 0) {
    if ((e & 1u) != 0) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return acc;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  if (nr == 0) throw std::domain_error("invmod: zero");
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % p) + p) % p;
}

std::int64_t normmod(const mpz_class& a, std::int64_t p) {
  mpz_class r = a % mpz_class(static_cast<long>(p));
  if (r < 0) r += static_cast<long>(p);
  return r.get_si();
}

std::int64_t least_nonresidue(std::int64_t p) {
  for (std::int64_t z = 2; z < p; ++z) {
    if (powmod(z, static_cast<std::uint64_t>((p - 1) / 2), p) == p - 1) return z;
  }
  throw std::domain_error("least_nonresidue: no non-residue for p=" + std::to_string(p));
}

std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  if (powmod(a, static_cast<std::uint64_t>((p - 1) / 2), p) != 1) return std::nullopt;
  std::uint64_t q = static_cast<std::uint64_t>(p - 1);
  int s = 0;
  while ((q & 1u) == 0) {
    q >>= 1;
    ++s;
  }
  const std::int64_t z = least_nonresidue(p);
  std::int64_t m = s;
  std::int64_t c = powmod(z, q, p);
  std::int64_t t = powmod(a, q, p);
  std::int64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  // Canonical branch: the smaller representative.
  return std::min(r, p - r);
}

bool is_prime_u64(std::uint64_t n) {
  return is_probable_prime(mpz_class(static_cast<unsigned long>(n)));
}

}  // namespace apollo::nt
