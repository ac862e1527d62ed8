#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stt/matrix.hpp>

using namespace stt;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) { return Scalar::of_mpq(Q, mpq_class(n, d)); }

Matrix mat(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (auto& row : rows) {
    std::vector<Scalar> s;
    for (long v : row) s.push_back(Scalar::of_int(f, v));
    r.push_back(s);
  }
  return Matrix::from_rows(f, r);
}

// deterministic pseudo-random small matrices for the property checks
struct Lcg {
  std::uint64_t s;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  long small() { return static_cast<long>(next() >> 59) - 15; }
};

}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::parse(Q, "2/4") == q(1, 2));
  CHECK(Scalar::parse(Q, "-6/3") == q(-2));
  auto F5 = FieldSpec::prime(5);
  CHECK(Scalar::parse(F5, "7") == Scalar::of_int(F5, 2));
  CHECK(Scalar::of_int(F5, -1) == Scalar::of_int(F5, 4));
  CHECK(Scalar::of_int(F5, 2).inverse() == Scalar::of_int(F5, 3));
  CHECK_THROWS_AS(FieldSpec::prime(6), input_error);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), input_error);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix(Q, 0, 0)) == 0);
  CHECK(rank(Matrix::identity(Q, 3)) == 3);
  CHECK(rank(mat(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::identity(Q, 4)).cols() == 0);
  CHECK(kernel_basis(Matrix(Q, 2, 3)).cols() == 3);
  Matrix k = kernel_basis(mat(Q, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK_FALSE(k.at(0, 0).is_zero());
}

TEST_CASE("solve") {
  std::vector<Scalar> b{q(3), q(-1)};
  auto x = solve(Matrix::identity(Q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto none = solve(mat(Q, {{1, 0}, {0, 0}}), {q(0), q(1)});
  CHECK_FALSE(none);

  auto F5 = FieldSpec::prime(5);
  auto y = solve(mat(F5, {{2}}), {Scalar::of_int(F5, 1)});
  REQUIRE(y);
  CHECK((*y)[0] == Scalar::of_int(F5, 3));

  CHECK_THROWS_AS(solve(Matrix(Q, 2, 2), {q(1)}), internal_error);
}

TEST_CASE("invert") {
  CHECK(*invert(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
  CHECK_FALSE(invert(mat(Q, {{0}})));
  CHECK(*invert(mat(Q, {{1, 1}, {0, 1}})) == mat(Q, {{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert(Matrix(Q, 2, 3)), internal_error);
}

TEST_CASE("rank-nullity and exactness on pseudo-random matrices") {
  Lcg rng{12345};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = rng.next() % 5, c = rng.next() % 5;
    Matrix m(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, q(rng.small(), 1 + (rng.next() % 3)));
    Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == c);
    if (k.cols() > 0) CHECK((m * k).is_zero());

    std::vector<Scalar> x;
    for (std::size_t j = 0; j < c; ++j) x.push_back(q(rng.small()));
    auto sol = solve(m, m.apply(x));
    REQUIRE(sol);
    CHECK(m.apply(*sol) == m.apply(x));  // exact, no tolerance

    if (r == c && r > 0) {
      if (auto inv = invert(m)) {
        CHECK(m * *inv == Matrix::identity(Q, r));
        CHECK(*inv * m == Matrix::identity(Q, r));
      }
    }
  }
}

TEST_CASE("column space basis is canonical") {
  Matrix a = mat(Q, {{1, 2, 3}, {0, 1, 1}, {1, 3, 4}});
  Matrix b = mat(Q, {{3, 1}, {1, 0}, {4, 1}});  // same column space, shuffled
  CHECK(column_space_basis(a) == column_space_basis(b));
}

TEST_CASE("quotient space projections") {
  Matrix w = mat(Q, {{1}, {1}, {0}});
  QuotientSpace qs = quotient_space(w, 3, Q);
  CHECK(qs.proj.rows() == 2);
  CHECK((qs.proj * w).is_zero());
  CHECK(qs.proj * qs.section == Matrix::identity(Q, 2));
}
