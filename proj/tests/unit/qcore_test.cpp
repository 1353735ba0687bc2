#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "iqconc/errors.hpp"
#include "iqconc/qcore/eigen.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/qcore/state.hpp"
#include "oracles.hpp"

using namespace iqconc;
using namespace iqconc::qcore;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

PureState two_qubit_schmidt(double p0) {
  std::vector<Complex> v(4);
  v[0] = std::sqrt(p0);
  v[3] = std::sqrt(1.0 - p0);
  return PureState::from_amplitudes(v);
}

PureState ghz3() {
  std::vector<Complex> v(8);
  v[0] = kS;
  v[7] = kS;
  return PureState::from_amplitudes(v);
}

}  // namespace

TEST(PureState, RejectsUnnormalized) {
  EXPECT_THROW(PureState::from_amplitudes({1.0, 1.0}), DomainError);
  EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), DomainError);
  EXPECT_NO_THROW(PureState::from_amplitudes({kS, kS}));
}

TEST(PureState, BasisStateIndexConvention) {
  const auto s = PureState::basis_state(3, 0b100);
  EXPECT_EQ(s.num_qubits(), 3);
  EXPECT_DOUBLE_EQ(std::abs(s[4]), 1.0);
}

TEST(TensorProduct, BasisStates) {
  const auto t = tensor_product(PureState::basis_state(1, 0), PureState::basis_state(1, 1));
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_DOUBLE_EQ(std::abs(t[1]), 1.0);
}

TEST(TensorProduct, PlusPlusIsUniform) {
  const auto plus = PureState::from_amplitudes({kS, kS});
  const auto t = tensor_product(plus, plus);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(t[i].real(), 0.5, 1e-15);
}

TEST(TensorProduct, AppendedAncilla) {
  const auto t = tensor_product(two_qubit_schmidt(0.7), PureState::basis_state(1, 0));
  EXPECT_NEAR(t[0b000].real(), std::sqrt(0.7), 1e-15);
  EXPECT_NEAR(t[0b110].real(), std::sqrt(0.3), 1e-15);
  EXPECT_NEAR(norm_squared(t.amplitudes()), 1.0, 1e-12);
}

TEST(TensorProduct, CapacityLimit) {
  const auto a = PureState::basis_state(4, 0);
  const auto b = PureState::basis_state(3, 0);
  EXPECT_THROW(tensor_product(a, b), CapacityError);
}

TEST(PartialTrace, Examples) {
  const auto rho = partial_trace(ghz3(), {0}).matrix();
  EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-15);

  const auto r2 = partial_trace(PureState::basis_state(2, 0b01), {1}).matrix();
  EXPECT_NEAR(r2(1, 1).real(), 1.0, 1e-15);

  const auto r3 = partial_trace(two_qubit_schmidt(0.7), {0}).matrix();
  EXPECT_NEAR(r3(0, 0).real(), 0.7, 1e-15);
  EXPECT_NEAR(r3(1, 1).real(), 0.3, 1e-15);
}

TEST(PartialTrace, FullSetRejected) {
  EXPECT_THROW(partial_trace(ghz3(), {0, 1, 2}), DomainError);
}

TEST(PartialTrace, MatchesExplicitSum) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> v(32);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    const auto s = PureState::normalized(v);
    std::vector<Complex> psi(s.amplitudes().begin(), s.amplitudes().end());
    for (const std::vector<int>& keep : {std::vector<int>{1}, {0, 3}, {1, 2, 4}}) {
      const auto got = partial_trace(s, QubitSubset(keep)).matrix();
      const auto want = oracle::reduced_density(psi, 5, keep);
      EXPECT_LT(max_abs_diff(got, want), 1e-14);
    }
  }
}

TEST(QubitSubset, Invariants) {
  EXPECT_THROW(QubitSubset({1, 0}), DomainError);
  EXPECT_THROW(QubitSubset(std::vector<int>{}), DomainError);
  EXPECT_THROW(QubitSubset({0, 3}).check_within(3), DomainError);
  const auto c = QubitSubset({1}).complement(3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.indices()[0], 0);
  EXPECT_EQ(c.indices()[1], 2);
}

TEST(Eigen, SmallExamples) {
  const double d[] = {0.7, 0.3};
  const auto ev = hermitian_eigenvalues(Matrix::diagonal(d));
  EXPECT_NEAR(ev[0], 0.3, 1e-15);
  EXPECT_NEAR(ev[1], 0.7, 1e-15);

  const auto y = Matrix::from_rows(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
  const auto ey = hermitian_eigenvalues(y);
  EXPECT_NEAR(ey[0], -1.0, 1e-15);
  EXPECT_NEAR(ey[1], 1.0, 1e-15);
}

TEST(Eigen, NonHermitianRejected) {
  const auto m = Matrix::from_rows(2, 2, {0.0, 1.0, 0.0, 0.0});
  EXPECT_THROW(hermitian_eigenvalues(m), DomainError);
}

TEST(Eigen, MatchesBisectionOracle) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto h = oracle::random_hermitian(rng, n);
      const auto got = hermitian_eigenvalues(h);
      const auto want = oracle::spectrum_by_bisection(h);
      ASSERT_EQ(got.size(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(got[k], want[k], 1e-9) << "n=" << n;
      double sum = 0.0;
      for (double v : got) sum += v;
      EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    }
  }
}

TEST(Eigen, SpectrumReproducesDeterminant) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = oracle::random_hermitian(rng, n);
      const auto ev = hermitian_eigenvalues(h);
      double prod = 1.0;
      for (double v : ev) prod *= v;
      EXPECT_NEAR(prod, oracle::determinant(h).real(), 1e-10 * std::max(1.0, std::abs(prod)));
    }
  }
}

TEST(Eigen, EigensystemReconstructs) {
  std::mt19937_64 rng(9);
  const auto h = oracle::random_hermitian(rng, 8);
  const auto es = hermitian_eigensystem(h);
  const auto& v = es.vectors;
  Matrix d(8, 8);
  for (std::size_t k = 0; k < 8; ++k) d(k, k) = es.values[k];
  EXPECT_LT(max_abs_diff(v * d * v.adjoint(), h), 1e-11);
  EXPECT_LT(max_abs_diff(v.adjoint() * v, Matrix::identity(8)), 1e-12);
}

TEST(Eigen, SingularValuesOfDiagonalTimesUnitary) {
  std::mt19937_64 rng(3);
  const auto q = oracle::random_real_orthogonal(rng, 4);
  const double s[] = {1e-9, 0.2, 0.5, 3.0};
  const auto sv = singular_values(Matrix::diagonal(s) * q);
  EXPECT_NEAR(sv[0], 3.0, 1e-14);
  EXPECT_NEAR(sv[3], 1e-9, 1e-15);
}

TEST(Scp, Examples) {
  EXPECT_NEAR(scp(two_qubit_schmidt(0.5), {0}), 1.0, 1e-15);
  EXPECT_NEAR(scp(two_qubit_schmidt(0.7), {0}), 0.6, 1e-15);
  EXPECT_NEAR(scp(PureState::basis_state(2, 0b01), {0}), 0.0, 1e-15);
  EXPECT_THROW(scp(ghz3(), {0, 1}), UnsupportedPartitionError);
}

TEST(Scp, BothSidesAgreeForTwoQubits) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> v(4);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    const auto s = PureState::normalized(v);
    EXPECT_NEAR(scp(s, {0}), scp(s, {1}), 1e-12);
  }
}

TEST(E2Pair, Examples) {
  EXPECT_NEAR(e2_pair(ghz3(), 0, 1), 1.0, 1e-15);
  std::vector<Complex> slice(8);
  slice[0b000] = 0.5;
  slice[0b100] = 0.5;
  slice[0b111] = kS;
  EXPECT_NEAR(e2_pair(PureState::from_amplitudes(slice), 1, 2), 1.0, 1e-12);
  const double w = 1.0 / std::sqrt(3.0);
  const auto wst = PureState::from_amplitudes({0.0, w, w, 0.0, w, 0.0, 0.0, 0.0});
  EXPECT_NEAR(e2_pair(wst, 0, 1), 2.0 / 3.0, 1e-14);
  EXPECT_THROW(e2_pair(wst, 1, 1), DomainError);
}

TEST(Concurrence, Examples) {
  const auto bell = DensityMatrix::from_pure(two_qubit_schmidt(0.5));
  EXPECT_NEAR(wootters_concurrence(bell), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(DensityMatrix::maximally_mixed(4)), 0.0, 1e-15);
}

TEST(Concurrence, CanonicalExample) {
  const double l0 = 0.6, l1 = 0.2, l2 = 0.3, l3 = 0.5;
  const double l4 = std::sqrt(1.0 - l0 * l0 - l1 * l1 - l2 * l2 - l3 * l3);
  std::vector<Complex> v(8);
  v[0b000] = l0;
  v[0b100] = std::polar(l1, 0.7);
  v[0b101] = l2;
  v[0b110] = l3;
  v[0b111] = l4;
  const auto s = PureState::from_amplitudes(v);
  EXPECT_NEAR(wootters_concurrence(partial_trace(s, {0, 1})), 2 * l0 * l3, 1e-9);
}

TEST(Concurrence, PureTwoQubitMatchesSchmidt) {
  for (double p : {0.5, 0.6, 0.9, 0.99, 1.0})
    EXPECT_NEAR(wootters_concurrence(DensityMatrix::from_pure(two_qubit_schmidt(p))),
                2.0 * std::sqrt(p * (1.0 - p)), 1e-12);
}

TEST(ThreeTangle, Values) {
  EXPECT_NEAR(three_tangle({kS, 0, 0, 0, kS, 0}), 2.0, 1e-15);
  EXPECT_EQ(three_tangle({0.6, 0.8, 0, 0, 0, 0}), 0.0);
  EXPECT_EQ(three_tangle({0.0, 0.6, 0.8, 0, 0, 0}), 0.0);
}

TEST(Entropy, Values) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(ghz3())), 0.0, 1e-12);
  const double d[] = {0.252136, 0.747864};
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_matrix(Matrix::diagonal(d))), 0.8146, 5e-4);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
}

TEST(Roi, Values) {
  const auto hat = PureState::from_amplitudes({kS, Complex(0, kS)});
  EXPECT_NEAR(roi(DensityMatrix::from_pure(hat)), 1.0, 1e-14);
  EXPECT_NEAR(roi(DensityMatrix::from_pure(ghz3())), 0.0, 1e-15);
  for (double a : {0.1, 0.4, std::numbers::pi / 4})
    for (double b : {0.0, 0.5, 2.0}) {
      const auto k = PureState::from_amplitudes({std::cos(a), std::polar(std::sin(a), b)});
      EXPECT_NEAR(roi(DensityMatrix::from_pure(k)), std::sin(2 * a) * std::sin(b), 1e-12);
    }
}

TEST(Roi, InvariantUnderRealOrthogonal) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  for (std::size_t dim : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Complex> v(dim);
      for (auto& x : v) x = Complex(g(rng), g(rng));
      const auto rho = DensityMatrix::from_pure(PureState::normalized(v));
      const auto o = oracle::random_real_orthogonal(rng, dim);
      const auto rotated = DensityMatrix::from_matrix(o * rho.matrix() * o.transpose());
      EXPECT_NEAR(roi(rotated), roi(rho), 1e-10);
    }
  }
}

TEST(DensityMatrix, Validation) {
  const double bad[] = {0.6, 0.6};
  EXPECT_THROW(DensityMatrix::from_matrix(Matrix::diagonal(bad)), DomainError);
  const double neg[] = {1.2, -0.2};
  EXPECT_THROW(DensityMatrix::from_matrix(Matrix::diagonal(neg)), DomainError);
  const double three[] = {0.5, 0.25, 0.25};
  EXPECT_THROW(DensityMatrix::from_matrix(Matrix::diagonal(three)), DomainError);
}

TEST(ProjectSubsystem, BranchesConserveProbability) {
  const double w = 1.0 / std::sqrt(3.0);
  const auto wst = PureState::from_amplitudes({0.0, w, w, 0.0, w, 0.0, 0.0, 0.0});
  const auto b0 = project_subsystem(wst, {2}, std::vector<Complex>{1.0, 0.0});
  const auto b1 = project_subsystem(wst, {2}, std::vector<Complex>{0.0, 1.0});
  EXPECT_NEAR(b0.probability + b1.probability, 1.0, 1e-15);
  ASSERT_TRUE(b0.post_state);
  EXPECT_NEAR(norm_squared(b0.post_state->amplitudes()), 1.0, 1e-12);
  EXPECT_NEAR(scp(*b0.post_state, {0}), 1.0, 1e-12);
}
