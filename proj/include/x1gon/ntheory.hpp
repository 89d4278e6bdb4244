#pragma once
#include <cstdint>
#include <vector>

namespace x1gon::nt {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (unsigned __int128)a * b % m;
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // m need not be prime; throws if not invertible
bool is_prime(uint64_t n);
// distinct prime factors, ascending
std::vector<uint64_t> prime_factors(uint64_t n);
uint64_t euler_phi(uint64_t n);
uint64_t gcd(uint64_t a, uint64_t b);
// multiplicative order of a modulo m (gcd(a,m)=1)
uint64_t mult_order(uint64_t a, uint64_t m);
// primes p = 1 mod n just below 2^bits, descending; k-th such prime
uint64_t split_prime(uint64_t n, int k, int bits = 62);
// element of exact order n in F_p^*, p = 1 mod n
uint64_t root_of_unity(uint64_t n, uint64_t p);
int mobius(uint64_t n);
std::vector<uint64_t> divisors(uint64_t n);

// splitmix64 step: deterministic stream used for all seeded randomness
inline uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace x1gon::nt
