#ifndef HITCHIN_RATIONAL_HPP
#define HITCHIN_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hitchin {

// Exact rational scalar. Backed by GMP; always stored in canonical form
// (gcd(|num|,den)=1, den>=1), which mpq_class maintains via canonicalize().
using Rat = mpq_class;

// Raised when an operation's mathematical preconditions fail (as opposed to
// malformed input, which raises std::invalid_argument).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long n, long d = 1) {
  if (d == 0) throw domain_error("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q"; no whitespace.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("bad rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r = 1;
  Rat base = q;
  unsigned long k = e;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root if q is a perfect square of a rational; throws otherwise.
inline Rat rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) throw domain_error("rat_sqrt of negative value");
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class sn, sd, rem;
  mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t());
  if (rem != 0) throw domain_error("rat_sqrt: not a perfect square");
  mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw domain_error("rat_sqrt: not a perfect square");
  return Rat(sn, sd);
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

// Deterministic PRNG for sampling-style checks (seeded via HITCHINKIT_SEED).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long next_long(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Small random rational with numerator in [-bound,bound], denominator in [1,dmax].
  Rat next_rat(long bound = 9, long dmax = 4) {
    long n = next_long(-bound, bound);
    long d = next_long(1, dmax);
    return rat(n, d);
  }
  Rat next_nonzero_rat(long bound = 9, long dmax = 4) {
    Rat q = next_rat(bound, dmax);
    while (sgn(q) == 0) q = next_rat(bound, dmax);
    return q;
  }

private:
  std::uint64_t state_;
};

std::uint64_t seed_from_env(std::uint64_t fallback = 0x48495443u);

}  // namespace hitchin

#endif
