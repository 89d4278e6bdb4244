#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "x1gon/cusps.hpp"
#include "x1gon/ntheory.hpp"

using namespace x1gon;
using namespace x1gon::cusps;

namespace {

RatFunc xyr(const char* s) { return RatFunc(parse_zpoly(s, modeq::XY)); }

const DivisorVec kDivX29{0, -1, -2, -3, -1, 0, 0, 0, 3, 2, -1, -3, 2, 3, 1};
const DivisorVec kDivXt29{0, 2, 0, 0, -1, -2, 1, -3, 2, 3, -1, 3, -1, -3, 0};

}  // namespace

TEST_CASE("orbit degrees") {
  auto degs = [](int N) {
    std::vector<int> v;
    for (auto& o : orbits(N)) v.push_back(o.degree);
    return v;
  };
  auto d29 = degs(29);
  CHECK(d29.size() == 15);
  CHECK(d29[0] == 14);
  CHECK(std::count(d29.begin(), d29.end(), 1) == 14);
  auto d25 = degs(25);
  CHECK(d25[0] == 10);
  CHECK(d25[5] == 4);
  CHECK(d25[10] == 4);
  CHECK(std::count(d25.begin(), d25.end(), 1) == 10);
  auto d37 = degs(37);
  CHECK(d37[0] == 18);
  CHECK(std::count(d37.begin(), d37.end(), 1) == 18);
  for (int N = 5; N <= 80; ++N) {
    long s = 0, w = 0;
    for (auto& o : orbits(N)) {
      s += o.degree;
      w += (long)o.degree * o.width;
    }
    CHECK(num_orbits(N) == N / 2 + 1);
    CHECK(s == total_cusps(N));
    CHECK(w == psl2_index(N));
  }
}

TEST_CASE("diamond operators") {
  for (int N : {13, 20, 29}) {
    DivisorVec D(num_orbits(N));
    uint64_t s = N;
    for (auto& v : D) v = (long)(nt::splitmix64(s) % 7) - 3;
    CHECK(diamond_permute(N, 1, D) == D);
    CHECK(diamond_permute(N, N - 1, D) == D);
    for (long i = 1; i < N; ++i) {
      if (nt::gcd(i, N) != 1) {
        CHECK_THROWS_AS(diamond_permute(N, i, D), NotADiamond);
        continue;
      }
      CHECK(degree(N, diamond_permute(N, i, D)) == degree(N, D));
    }
  }
  CHECK(diamond_permute(29, 12, kDivX29) == kDivXt29);
  CHECK_THROWS_AS(degree(29, DivisorVec(3)), MalformedDivisor);
}

TEST_CASE("level 29 divisors") {
  auto T = divisor_table(29);
  REQUIRE(T.rows.size() == 14);
  DivisorVec dx(15);
  for (int i = 0; i < 15; ++i) dx[i] = T.rows[5][i] - T.rows[6][i];
  CHECK(dx == kDivX29);
  CHECK(divisor_of(29, from_xy(xyr("x")), true) == kDivX29);
  CHECK(labeling_certified());
  CHECK_FALSE(T.labels_provisional);

  auto n = express_in_lattice(T, kDivXt29);
  RatFunc g = xyr("1");
  for (int k = 2; k <= 15; ++k) g = g * modeq::f_poly(k).value().pow((int)n[k - 2].get_si());
  RatFunc printed(parse_zpoly("(x^2*y-x*y+y-1)*(x-1)^2*(x-y+1)*(x^2*y-x*y^2-x^2+x*y-x+y-1)^4*y^3", modeq::XY),
                  parse_zpoly("(y-1)^2*(x*y-1)*(x-y)*(x^2*y-x*y^2-x*y+y^2-1)^4*x^4", modeq::XY));
  RatFunc ratio = g / printed;
  CHECK(ratio.num().is_constant());
  CHECK(ratio.den().is_constant());
}

TEST_CASE("express_in_lattice") {
  auto T = divisor_table(13);
  auto e = express_in_lattice(T, T.rows[3]);
  for (size_t i = 0; i < e.size(); ++i) CHECK(e[i] == (i == 3 ? 1 : 0));
  auto z = express_in_lattice(T, DivisorVec(num_orbits(13), 0));
  for (auto& v : z) CHECK(v == 0);
  DivisorVec bad(num_orbits(13), 0);
  bad[1] = 1;
  bad[2] = -1;
  CHECK_THROWS_AS(express_in_lattice(T, bad), NotInLattice);
}

TEST_CASE("divisor tables for small levels") {
  for (int N = 4; N <= 24; ++N) {
    auto T = divisor_table(N);
    CHECK(T.rows.size() == (size_t)(N / 2));
    for (auto& r : T.rows) CHECK(degree(N, r) == 0);
    CHECK(T.matrix().rank() == T.rows.size());
    if (N >= 5 && N <= kBuiltinTables) CHECK(compute_divisor_table(N).rows == T.rows);
    // diamond images of rows stay in the row lattice
    for (long i = 2; i < N; ++i) {
      if (nt::gcd(i, N) != 1) continue;
      for (auto& r : T.rows) CHECK_NOTHROW(express_in_lattice(T, diamond_permute(N, i, r)));
    }
  }
}

TEST_CASE("degree of x matches rounding formula at primes") {
  for (int N : {11, 13, 17, 19, 23, 29, 31, 37}) {
    auto D = divisor_of(N, from_xy(xyr("x")));
    long s = 0;
    for (int n = 0; n < (int)D.size(); ++n) s += std::labs(D[n]) * orbit_degree(N, n);
    CHECK(s / 2 == std::lround(11.0 * N * N / 840.0));
  }
}

TEST_CASE("rowvec format round trip") {
  auto T = divisor_table(12);
  auto text = to_rowvec(T);
  CHECK(text.rfind("# X1 N=12 orbits=7 format=rowvec-v1\n", 0) == 0);
  CHECK(parse_rowvec(text).rows == T.rows);
  CHECK_THROWS_AS(parse_rowvec("# X1 N=12 orbits=6 format=rowvec-v1\n"), ParseError);
}

TEST_CASE("F_k over f_k lies in the span of earlier units") {
  for (int N : {22, 29}) {
    auto T = divisor_table(N);
    for (int k = 4; k <= N / 2 + 1; ++k) {
      auto dF = divisor_of(N, from_bc(modeq::unit_F(k)));
      DivisorVec diff(dF.size());
      for (size_t i = 0; i < dF.size(); ++i) diff[i] = dF[i] - T.rows[k - 2][i];
      DivisorTable sub = T;
      sub.rows.resize(k - 2);
      if (k == 4 || k == 5)
        CHECK(diff == DivisorVec(dF.size(), 0));
      else
        CHECK_NOTHROW(express_in_lattice(sub, diff));
    }
  }
}

TEST_CASE("cusp places over a split prime carry the table labels") {
  for (int N : {13, 25, 29}) {
    CAPTURE(N);
    auto T = divisor_table(N);
    auto S = cusp_places(N, T);
    CHECK(S.p % N == 1);
    CHECK(S.total_degree() == total_cusps(N));
    auto os = orbits(N);
    std::vector<int> count(os.size());
    for (auto& cp : S.places) {
      CHECK(cp.place.residue_degree == 1);
      REQUIRE(cp.label >= 0);
      ++count[cp.label];
      for (size_t r = 0; r < T.rows.size(); ++r) CHECK(cp.valuations[r] == T.rows[r][cp.label]);
    }
    for (size_t i = 0; i < os.size(); ++i) CHECK(count[i] == os[i].degree);
  }
}

TEST_CASE("serial and parallel table builds agree") {
  for (int N : {13, 18}) CHECK(compute_divisor_table_serial(N).rows == compute_divisor_table(N).rows);
}
