#include <omp.h>

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "uea/dense_matrix.hpp"
#include "uea/sparse_matrix.hpp"

using namespace uea;

TEST_CASE("rational arithmetic stays exact") {
  const Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "3/4");
  Scalar b = Scalar::parse(q, "-2/3");
  CHECK((a + b).to_string() == "1/12");
  CHECK((a * b).to_string() == "-1/2");
  CHECK((a / b).to_string() == "-9/8");
  CHECK(Scalar::parse(q, "-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(Scalar::parse(q, "6/-4"), Error);
  CHECK(Scalar::parse(q, "  7 ").to_string() == "7");
  CHECK(Scalar{q, 2L}.pow(10).to_string() == "1024");
  CHECK(a.inverse().to_string() == "4/3");
}

TEST_CASE("prime field arithmetic reduces into [0, p)") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar{f7, -1L}.to_string() == "6");
  CHECK(Scalar::parse(f7, "1/3").to_string() == "5");
  CHECK((Scalar{f7, 3L} * Scalar{f7, 5L}).to_string() == "1");
  CHECK(Scalar{f7, 3L}.pow(6).is_one());
  for (long v = 1; v < 7; ++v) CHECK((Scalar{f7, v} * Scalar{f7, v}.inverse()).is_one());
  const Field big = Field::prime(2147483647u);
  Scalar x{big, 2147483646L};
  CHECK((x * x).is_one());
}

TEST_CASE("scalar errors") {
  const Field q = Field::rationals();
  const Field f3 = Field::prime(3);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
  try {
    Scalar::zero(f3).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroInverse);
  }
  try {
    (void)(Scalar::one(q) + Scalar::one(f3));
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  try {
    Scalar::parse(q, "1/0");
    FAIL("1/0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  try {
    Scalar::parse(f3, "1/6");
    FAIL("denominator divisible by p accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  try {
    Scalar(f3, mpq_class{1, 6});
    FAIL("denominator divisible by p accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroInverse);
  }
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Scalar::parse(q, "1.5"), Error);
}

namespace {

SparseMatrix from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  SparseMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, Scalar{f, rows[r][c]});
  return m;
}

std::vector<std::vector<Scalar>> dense(const SparseMatrix& m) {
  std::vector<std::vector<Scalar>> d(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(m.field())));
  for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
  return d;
}

SparseMatrix random_matrix(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  SparseMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.set(r, c, oracle::random_scalar(rng, f));
  return m;
}

void check_kernel(const SparseMatrix& m, Exec exec) {
  const auto kernel = kernel_basis(m, exec);
  const auto d = dense(m);
  CHECK(kernel.size() == oracle::kernel_dim(d, m.cols()));
  for (const auto& v : kernel) {
    for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
  std::vector<std::vector<Scalar>> k(kernel.begin(), kernel.end());
  CHECK(oracle::rank(k) == kernel.size());
}

}  // namespace

TEST_CASE("kernel of a fixed rational matrix") {
  const Field q = Field::rationals();
  // rank 2; kernel spanned by (-1, 1, 0, 0, 0)... frozen from the dense oracle
  auto m = from_rows(q, {{1, 1, 2, 0, 3}, {2, 2, 4, 1, 7}, {3, 3, 6, 1, 10}});
  CHECK(oracle::kernel_dim(dense(m), 5) == 3);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 3);
  std::vector<std::string> first;
  for (const auto& x : k[0]) first.push_back(x.to_string());
  CHECK(first == std::vector<std::string>{"-1", "1", "0", "0", "0"});
  std::vector<std::string> third;
  for (const auto& x : k[2]) third.push_back(x.to_string());
  CHECK(third == std::vector<std::string>{"-3", "0", "0", "-1", "1"});
  CHECK(rank(m) == 2);
}

TEST_CASE("small kernels") {
  const Field f3 = Field::prime(3);
  auto k = kernel_basis(from_rows(f3, {{1, 1}, {0, 0}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{Scalar{f3, 2L}, Scalar{f3, 1L}});
  CHECK(kernel_basis(SparseMatrix(Field::rationals(), 2, 2)).size() == 2);
  CHECK(Scalar::parse(Field::rationals(), "2/3").inverse().to_string() == "3/2");
  CHECK(Scalar{f3, 2L}.inverse().to_string() == "2");
}

TEST_CASE("Fermat check in prime fields") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 101u, 65521u}) {
    const Field f = Field::prime(p);
    std::uniform_int_distribution<long> d(1, static_cast<long>(p) - 1);
    for (int t = 0; t < 20; ++t) CHECK(Scalar{f, d(rng)}.pow(p - 1).is_one());
  }
}

TEST_CASE("rank plus nullity on random 50 x 50 matrices") {
  std::mt19937 rng(2024);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 4; ++t) {
      auto m = random_matrix(rng, f, 50, 50, 0.05 + 0.02 * t);
      CHECK(rank(m) + kernel_basis(m).size() == 50);
      CHECK(rank(m) == oracle::rank(dense(m)));
    }
  }
}

TEST_CASE("fractions appear only where forced") {
  const Field q = Field::rationals();
  auto m = from_rows(q, {{2, 3}, {4, 6}});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0].to_string() == "-3/2");
  CHECK(k[0][1].to_string() == "1");
}

TEST_CASE("random kernels agree with dense elimination") {
  std::mt19937 rng(1234);
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(101)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> size(1, 12);
      auto m = random_matrix(rng, f, size(rng), size(rng), 0.4);
      check_kernel(m, Exec::Serial);
      check_kernel(m, Exec::Parallel);
    }
  }
}

TEST_CASE("serial and parallel elimination give identical echelon forms") {
  std::mt19937 rng(99);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    auto m = random_matrix(rng, f, 150, 90, 0.08);
    const auto a = reduced_echelon(m, Exec::Serial);
    const auto b = reduced_echelon(m, Exec::Parallel);
    CHECK(a.pivot_cols == b.pivot_cols);
    CHECK(a.rows == b.rows);
    CHECK(kernel_basis(m, Exec::Serial) == kernel_basis(m, Exec::Parallel));
  }
}

TEST_CASE("row space membership") {
  const Field q = Field::rationals();
  auto m = from_rows(q, {{1, 2, 0}, {0, 1, 1}});
  const auto e = reduced_echelon(m);
  Vector in{Scalar{q, 2L}, Scalar{q, 5L}, Scalar{q, 1L}};
  Vector out{Scalar{q, 0L}, Scalar{q, 0L}, Scalar{q, 1L}};
  CHECK(in_row_space(e, in));
  CHECK_FALSE(in_row_space(e, out));
  std::vector<Vector> vs{in, out, in};
  CHECK(span_rank(q, 3, vs) == 2);
}

TEST_CASE("sparse matrix bounds and fields") {
  SparseMatrix m(Field::prime(5), 2, 2);
  CHECK_THROWS_AS(m.set(2, 0, Scalar::one(Field::prime(5))), Error);
  CHECK_THROWS_AS(m.set(0, 0, Scalar::one(Field::rationals())), Error);
  m.set(0, 1, Scalar{Field::prime(5), 3L});
  m.add(0, 1, Scalar{Field::prime(5), 2L});
  CHECK(m.nnz() == 0);
}

TEST_CASE("dense matrices") {
  const Field f3 = Field::prime(3);
  DenseMatrix a(f3, 2, 2);
  a(0, 1) = Scalar::one(f3);
  a(1, 0) = Scalar::one(f3);
  CHECK(a.pow(2) == DenseMatrix::identity(f3, 2));
  CHECK(a.inverse().value() == a);
  DenseMatrix z(f3, 2, 2);
  CHECK(z.is_zero());
  CHECK_FALSE(z.inverse().has_value());
}

TEST_CASE("oversubscribed elimination matches serial") {
  const int before = omp_get_max_threads();
  omp_set_num_threads(4);
  std::mt19937 rng(77);
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto m = random_matrix(rng, f, 300, 200, 0.04);
    CHECK(kernel_basis(m, Exec::Parallel) == kernel_basis(m, Exec::Serial));
  }
  omp_set_num_threads(before);
}
