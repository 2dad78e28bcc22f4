// Copyright 2026 The discord-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "discord/error.hpp"
#include "discord/numerics.hpp"
#include "support.hpp"

using namespace discord;

TEST_CASE("pauli matrices square to identity") {
  for (const auto& s : pauli()) CHECK((s * s - CMat2::Identity()).norm() < 1e-15);
  CHECK((pauli()[1] * pauli()[2] - Complex(0, 1) * pauli()[3]).norm() < 1e-15);
}

TEST_CASE("reshuffle is an involution") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const CMat4 m = CMat4::Random();
    CHECK((reshuffle(reshuffle(m)) - m).norm() < 1e-15);
    CHECK((reshuffle_inverse(reshuffle(m)) - m).norm() < 1e-15);
  }
}

TEST_CASE("reshuffled Bell projector is half the identity") {
  const CMat4 phi = to_density(testing::kBell);
  CHECK((reshuffle(phi) - 0.5 * CMat4::Identity()).norm() < 1e-15);
}

TEST_CASE("pauli representation matches expectation values") {
  SUBCASE("X states") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const XState x = random_xstate(s);
      const RMat r = to_pauli_rep(to_density(x));
      const auto ref = oracle::pauli_expectations(testing::to_oracle(x));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(r(i, j) == doctest::Approx(ref[i][j]).epsilon(1e-12));
    }
  }
  SUBCASE("generic states") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const CMat4 rho = testing::random_density(s);
      const RMat r = to_pauli_rep(rho);
      const auto ref = oracle::pauli_expectations(testing::to_oracle(rho));
      double err = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) err = std::max(err, std::abs(r(i, j) - ref[i][j]));
      CHECK(err < 1e-12);
      CHECK((from_pauli_rep(r) - rho).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("non-hermitian input is rejected") {
  CMat4 m = to_density(testing::kSample);
  m(0, 1) = 0.2;
  CHECK_THROWS_AS(to_pauli_rep(m), Error);
  try {
    to_pauli_rep(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
  CHECK(hermiticity_residue(m) == doctest::Approx(0.2));
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  for (double p = 0.01; p < 1.0; p += 0.07) {
    CHECK(binary_entropy(p) == doctest::Approx(oracle::h2(p)).epsilon(1e-13));
    CHECK(binary_entropy(p) == doctest::Approx(binary_entropy(1.0 - p)).epsilon(1e-13));
  }
  CHECK(qubit_entropy(0.0) == doctest::Approx(1.0));
  CHECK(qubit_entropy(1.0) == 0.0);
}

TEST_CASE("von Neumann entropy agrees with a Jacobi reference") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const CMat4 rho = testing::random_density(100 + s);
    const double ref = oracle::entropy(testing::to_oracle(rho));
    CHECK(von_neumann_entropy(rho) == doctest::Approx(ref).epsilon(1e-10));
    const CMat2 ra = partial_trace_b(rho);
    oracle::M2 ora = oracle::trace_b(testing::to_oracle(rho));
    CHECK(von_neumann_entropy(ra) == doctest::Approx(oracle::entropy(ora)).epsilon(1e-10));
  }
  CHECK(von_neumann_entropy(CMat4(CMat4::Identity() / 4.0)) == doctest::Approx(2.0));
  CHECK(von_neumann_entropy(to_density(testing::kBell)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("negative spectrum raises UnphysicalState") {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.1;
  m(1, 1) = -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(m), Error);
  // Rounding-level negatives are clipped.
  m(0, 0) = 1.0 + 1e-11;
  m(1, 1) = -1e-11;
  CHECK(von_neumann_entropy(m) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("partial traces and Bloch vectors") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const CMat4 rho = testing::random_density(200 + s);
    const auto o = testing::to_oracle(rho);
    const auto ta = oracle::trace_a(o);
    const auto tb = oracle::trace_b(o);
    const CMat2 pa = partial_trace_a(rho);
    const CMat2 pb = partial_trace_b(rho);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(pa(i, j) - ta[i][j]) < 1e-14);
        CHECK(std::abs(pb(i, j) - tb[i][j]) < 1e-14);
      }
    }
    const BlochVector r = bloch_vector(pb);
    for (int k = 1; k < 4; ++k) {
      CHECK(r(k - 1) == doctest::Approx((pb * pauli()[k]).trace().real()).epsilon(1e-13));
    }
    CHECK((density_from_bloch(r) - pb).norm() < 1e-14);
  }
}

TEST_CASE("kron matches the reference") {
  const auto k = kron(pauli()[1], pauli()[2]);
  const auto ref = oracle::kron(oracle::sigma(1), oracle::sigma(2));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(k(i, j) - ref[i][j]) < 1e-15);
}

TEST_CASE("upsilon is unitary up to scale") {
  const CMat4& u = upsilon();
  const CMat4 g = u * u.adjoint();
  CHECK((g - g(0, 0) * CMat4::Identity()).norm() < 1e-14);
}
