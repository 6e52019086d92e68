#include "doctest.h"

#include <cmath>

#include "nncurv/matrix.hpp"

using namespace nncurv;

namespace {

Mat entry(std::size_t n, std::size_t r, std::size_t c, const Quat& q) {
    Mat m(n);
    m.at(r, c) = q;
    return m;
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
    const Quat I = Quat::i(), J = Quat::j(), K = Quat::k();
    CHECK(I * J == K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(J * I == -K);
    CHECK(I * I == Quat(-1));
    CHECK(J * J == Quat(-1));
    CHECK(K * K == Quat(-1));
    CHECK((Quat(2) * I) == Quat(0, 2, 0, 0));
}

TEST_CASE("quaternion conjugation and norms") {
    Quat q(1, 2, -3, 0.5);
    CHECK(q.conj().w == 1);
    CHECK(q.conj().x == -2);
    CHECK(q.normSq() == doctest::Approx(1 + 4 + 9 + 0.25));
    CHECK((q.conj() * q).x == doctest::Approx(0));
    CHECK(q.dot(q) == doctest::Approx(q.normSq()));
}

TEST_CASE("matrix arithmetic and adjoint") {
    Mat a = entry(2, 0, 1, Quat::i());
    Mat b = entry(2, 1, 0, Quat(1));
    Mat s = a + b;
    CHECK(s.at(0, 1) == Quat::i());
    CHECK(s.at(1, 0) == Quat(1));
    CHECK((s * 2.0).at(0, 1) == Quat(0, 2, 0, 0));

    // adjoint conjugates entries while transposing
    Mat h = a.conjTranspose();
    CHECK(h.at(1, 0) == Quat(0, -1, 0, 0));

    // ij = k surfaces in the product entry
    Mat p = entry(2, 0, 0, Quat::i()).matmul(entry(2, 0, 1, Quat::j()));
    CHECK(p.at(0, 1) == Quat::k());
}

TEST_CASE("generator shapes and norms") {
    CHECK(skewE(4, 0, 2).norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(symF(4, 0, 2).norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(symF(4, 2, 2).norm() == doctest::Approx(1.0));
    CHECK(skewE(4, 1, 1).norm() == doctest::Approx(0.0));
    CHECK(skewE(4, 0, 2).isSkewHermitian(1e-14));
    CHECK((symF(3, 0, 1) * Quat::i()).isSkewHermitian(1e-14));
    CHECK_FALSE(symF(3, 0, 1).isSkewHermitian(1e-14));
    CHECK(diagUnit(2, 1, Quat::j()).at(1, 1) == Quat::j());
    CHECK(unitAt(3, 0, 2, Quat::k()).at(0, 2) == Quat::k());
}

TEST_CASE("field membership") {
    CHECK(skewE(3, 0, 1).respectsField(Field::Real, 0));
    CHECK_FALSE((symF(3, 0, 1) * Quat::i()).respectsField(Field::Real, 0));
    CHECK((symF(3, 0, 1) * Quat::i()).respectsField(Field::Complex, 0));
    CHECK_FALSE((symF(3, 0, 1) * Quat::j()).respectsField(Field::Complex, 0));
    CHECK((symF(3, 0, 1) * Quat::j()).respectsField(Field::Quaternion, 0));
}

TEST_CASE("inner product is the real trace pairing") {
    Mat a = skewE(3, 0, 1);
    Mat b = symF(3, 0, 1) * Quat::i();
    CHECK(a.inner(a) == doctest::Approx(2.0));
    CHECK(a.inner(b) == doctest::Approx(0.0));
    CHECK(a.inner(b) == doctest::Approx(b.inner(a)));
}

// Chained index convention: [e_ab, e_bc] lands on e_ac.
TEST_CASE("skew generator brackets, adjacent indices") {
    Mat lhs = bracket(skewE(4, 0, 1), skewE(4, 1, 2));
    CHECK((lhs - skewE(4, 0, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("skew generator brackets, shared column") {
    Mat lhs = bracket(skewE(5, 0, 4), skewE(5, 1, 4));
    CHECK((lhs + skewE(5, 0, 1)).norm() == doctest::Approx(0.0));
}

TEST_CASE("skew generator brackets, shared row") {
    Mat lhs = bracket(skewE(5, 0, 1), skewE(5, 0, 2));
    CHECK((lhs + skewE(5, 1, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("skew against symmetric pins the diagonal") {
    // [E(1,2), i F(1,2)] = 2i (e_11 - e_22)
    Mat lhs = bracket(skewE(3, 1, 2), symF(3, 1, 2) * Quat::i());
    Mat want = (entry(3, 1, 1, Quat::i()) - entry(3, 2, 2, Quat::i())) * 2.0;
    CHECK((lhs - want).norm() == doctest::Approx(0.0));
}

TEST_CASE("commuting combination in the unitary algebra") {
    // both sides built from one root pair plus its partner combination
    Mat x = skewE(3, 1, 2) + skewE(3, 0, 1) + skewE(3, 0, 2);
    Mat y = (symF(3, 1, 2) + symF(3, 0, 1) - symF(3, 0, 2)) * Quat::i();
    CHECK(bracket(x, y).norm() == doctest::Approx(0.0));
}

TEST_CASE("commuting combination in the orthogonal algebra") {
    Mat x = skewE(5, 0, 1) - skewE(5, 1, 3);
    Mat y = skewE(5, 0, 2) + skewE(5, 2, 3);
    CHECK(bracket(x, y).norm() == doctest::Approx(0.0));
}

TEST_CASE("half-sum bracket identity in so(5)") {
    Mat xm = (skewE(5, 1, 4) + skewE(5, 2, 3)) * 0.5;
    Mat ym = (skewE(5, 1, 2) + skewE(5, 3, 4)) * 0.5;
    Mat want = (skewE(5, 1, 3) - skewE(5, 2, 4)) * -0.5;
    CHECK((bracket(xm, ym) - want).norm() == doctest::Approx(0.0));
}

TEST_CASE("quaternion diagonal brackets") {
    Mat x = diagUnit(2, 0, Quat::j());
    Mat y = diagUnit(2, 0, Quat(0, -1, 0, -1));
    Mat got = bracket(x, y);
    // [j, -i-k] = 2k - 2i
    CHECK(got.at(0, 0) == Quat(0, -2, 0, 2));
    CHECK(got.at(1, 1) == Quat(0));
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
    Mat a = skewE(4, 0, 1) + symF(4, 1, 2) * Quat::j();
    Mat b = skewE(4, 2, 3) + symF(4, 0, 3) * Quat::i();
    Mat c = diagUnit(4, 1, Quat::k());
    CHECK((bracket(a, b) + bracket(b, a)).norm() == doctest::Approx(0.0));
    Mat jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
              bracket(c, bracket(a, b));
    CHECK(jac.norm() == doctest::Approx(0.0).epsilon(1e-12));
}
