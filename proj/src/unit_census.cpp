// Existence of units of a given degree via classes of effective cuspidal divisors.
#include <algorithm>
#include <climits>
#include <numeric>

#include "x1gon/errors.hpp"
#include "x1gon/lattice.hpp"

namespace x1gon::lattice {

long count_effective(const std::vector<long>& weights, long d) {
  std::vector<long> c(d + 1, 0);
  c[0] = 1;
  for (long w : weights)
    for (long k = w; k <= d; ++k) c[k] = (c[k] > LONG_MAX - c[k - w]) ? LONG_MAX : c[k] + c[k - w];
  return c[d];
}

namespace {

// class of a divisor in Z^m / (unit rows): coordinates of v*V modulo the Smith invariants
struct ClassCoder {
  std::vector<int64_t> mod;                 // 0: free coordinate
  std::vector<std::vector<int64_t>> col;    // col[j][k]: class of the j-th unit vector

  explicit ClassCoder(const IntMatrix& A) {
    auto S = smith_normal_form(A);
    auto dg = S.diagonal();
    size_t m = A.cols(), r = S.rank();
    std::vector<size_t> idx;
    for (size_t i = 0; i < m; ++i) {
      if (i < r) {
        Integer s = abs(dg[i]);
        if (s == 1) continue;
        if (s >= (Integer(1) << 62)) throw Undecided("class group invariant too large");
        mod.push_back(s.get_si());
      } else {
        mod.push_back(0);
      }
      idx.push_back(i);
    }
    col.assign(m, std::vector<int64_t>(idx.size()));
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < idx.size(); ++k) {
        Integer x = S.V(j, idx[k]);
        if (mod[k]) {
          Integer r2;
          mpz_fdiv_r_ui(r2.get_mpz_t(), x.get_mpz_t(), (unsigned long)mod[k]);
          x = r2;
        } else if (!x.fits_slong_p()) {
          throw Undecided("free class coordinate too large");
        }
        col[j][k] = x.get_si();
      }
  }
  size_t size() const { return mod.size(); }
  void add(std::vector<int64_t>& key, size_t j, long a) const {
    for (size_t k = 0; k < key.size(); ++k) {
      if (mod[k]) {
        __int128 t = (__int128)key[k] + (__int128)a * col[j][k];
        key[k] = (int64_t)(t % mod[k]);
      } else {
        key[k] += a * col[j][k];
      }
    }
  }
};

uint64_t mix(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb93fe53b4a4dULL;
  h ^= h >> 33;
  return h;
}

uint64_t hash_key(const std::vector<int64_t>& key) {
  uint64_t h = 0x243F6A8885A308D3ULL;
  for (auto x : key) h = mix(h ^ (uint64_t)x) + 0x9E3779B97F4A7C15ULL;
  return h;
}

struct Entry {
  uint64_t h;
  uint32_t mask;
  bool operator<(const Entry& o) const { return h != o.h ? h < o.h : mask < o.mask; }
};

// enumerate effective divisors of degree d; weight-1 columns last so every branch completes
template <class Leaf>
void for_each_effective(const std::vector<long>& w, const std::vector<size_t>& order, const ClassCoder& C, long d,
                        Leaf&& leaf) {
  size_t m = order.size();
  std::vector<long> a(w.size(), 0);
  std::vector<std::vector<int64_t>> key(m + 1, std::vector<int64_t>(C.size(), 0));
  auto rec = [&](auto&& self, size_t t, long rem, uint32_t mask) -> void {
    if (t == m) {
      if (rem == 0) leaf(key[m], mask, a);
      return;
    }
    size_t j = order[t];
    long wj = w[j];
    if (t == m - 1) {
      if (rem % wj) return;
      long k = rem / wj;
      key[m] = key[t];
      if (k) C.add(key[m], j, k);
      a[j] = k;
      self(self, m, 0, k ? mask | (1u << j) : mask);
      a[j] = 0;
      return;
    }
    for (long k = 0; k * wj <= rem; ++k) {
      key[t + 1] = key[t];
      if (k) C.add(key[t + 1], j, k);
      a[j] = k;
      self(self, t + 1, rem - k * wj, k ? mask | (1u << j) : mask);
    }
    a[j] = 0;
  };
  rec(rec, 0, d, 0);
}

UnitDegreeResult decide(const UnitLattice& L, long d, long max_divisors, bool exact) {
  UnitDegreeResult R;
  if (d < 1) return R;
  const auto& w = L.weights;
  size_t m = w.size();
  if (m > 31) throw Undecided("too many cusp orbits for the divisor census");
  long total = count_effective(w, d);
  if (total > max_divisors) throw Undecided("too many effective divisors: " + std::to_string(total));
  R.divisors = total;
  ClassCoder C(L.basis);
  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return w[x] > w[y]; });
  const long chunk_size = 1L << 24;
  uint64_t chunks = (uint64_t)std::max<long>(1, (total + chunk_size - 1) / chunk_size);

  // candidate pair: divisors with equal hash, masks (m1, m2)
  auto verify = [&](uint64_t h, uint32_t m1, uint32_t m2) -> bool {
    std::vector<std::vector<long>> found;
    for_each_effective(w, order, C, d, [&](const std::vector<int64_t>& key, uint32_t mask, const std::vector<long>& a) {
      if (found.size() >= 64 || hash_key(key) != h) return;
      if (exact && mask != m1 && mask != m2) return;
      found.push_back(a);
    });
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = i + 1; j < found.size(); ++j) {
        std::vector<Integer> v(m);
        std::vector<long> vl(m);
        bool disjoint = true;
        for (size_t t = 0; t < m; ++t) {
          vl[t] = found[i][t] - found[j][t];
          v[t] = vl[t];
          if (found[i][t] && found[j][t]) disjoint = false;
        }
        if (exact && !disjoint) continue;
        auto sol = solve_left(L.basis, v);
        if (sol.status != SolveStatus::Ok) continue;
        R.exists = true;
        R.divisor = vl;
        R.degree = weighted_degree(vl, w);
        R.exponents.clear();
        for (auto& x : sol.x) R.exponents.push_back(x.get_si());
        return true;
      }
    return false;
  };

  std::vector<Entry> buf;
  for (uint64_t c = 0; c < chunks; ++c) {
    buf.clear();
    for_each_effective(w, order, C, d, [&](const std::vector<int64_t>& key, uint32_t mask, const std::vector<long>&) {
      uint64_t h = hash_key(key);
      if (h % chunks == c) buf.push_back({h, mask});
    });
    std::sort(buf.begin(), buf.end());
    for (size_t i = 0; i < buf.size();) {
      size_t j = i;
      while (j < buf.size() && buf[j].h == buf[i].h) ++j;
      if (j - i >= 2) {
        if (!exact) {
          if (verify(buf[i].h, 0, 0)) return R;
        } else {
          std::vector<uint32_t> ms;
          for (size_t t = i; t < j; ++t)
            if (ms.empty() || ms.back() != buf[t].mask) ms.push_back(buf[t].mask);
          bool hit = false;
          uint32_t h1 = 0, h2 = 0;
          if (ms.size() * ms.size() <= (size_t)1 << (m + 4)) {
            for (size_t x = 0; x < ms.size() && !hit; ++x)
              for (size_t y = x + 1; y < ms.size() && !hit; ++y)
                if (!(ms[x] & ms[y])) hit = true, h1 = ms[x], h2 = ms[y];
          } else {
            // subset-sum table: any mask inside the complement
            std::vector<int64_t> sub((size_t)1 << m, -1);
            for (size_t x = 0; x < ms.size(); ++x) sub[ms[x]] = (int64_t)x;
            for (size_t b = 0; b < m; ++b)
              for (size_t s = 0; s < sub.size(); ++s)
                if ((s >> b & 1) && sub[s] < 0) sub[s] = sub[s ^ ((size_t)1 << b)];
            uint32_t full = (uint32_t)(((size_t)1 << m) - 1);
            for (size_t x = 0; x < ms.size() && !hit; ++x) {
              int64_t y = sub[full & ~ms[x]];
              if (y >= 0) hit = true, h1 = ms[x], h2 = ms[y];
            }
          }
          if (hit && verify(buf[i].h, h1, h2)) return R;
        }
      }
      i = j;
    }
  }
  return R;
}

}  // namespace

UnitDegreeResult unit_of_exact_degree(const UnitLattice& L, long d, long max_divisors) {
  return decide(L, d, max_divisors, true);
}

UnitDegreeResult unit_up_to_degree(const UnitLattice& L, long d, long max_divisors) {
  return decide(L, d, max_divisors, false);
}

}  // namespace x1gon::lattice
