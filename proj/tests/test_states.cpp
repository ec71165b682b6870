// Copyright 2026 The nlq Authors
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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "nlq/errors.hpp"
#include "nlq/random.hpp"
#include "nlq/states.hpp"
#include "oracles.hpp"

using namespace nlq;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

bool near(const BlochVector& a, const BlochVector& b, double tol) { return max_abs_diff(a, b) <= tol; }

}  // namespace

TEST_CASE("diagonal eigenstates") {
  const auto [ne, sw] = diag_eigenstates();
  const ComplexMatrix d = Complex(kR) * (pauli(1) + pauli(3));
  CHECK(max_abs_diff(d * ne, ne) < kAlgebraTol);
  CHECK(max_abs_diff(d * sw, Complex(-1.0) * sw) < kAlgebraTol);
  CHECK(std::abs(inner(ne, sw)) < kAlgebraTol);
  CHECK(ne.is_normalized());
  CHECK(sw.is_normalized());
  // Phase convention: first nonzero component real and positive.
  CHECK(ne[0].real() > 0.0);
  CHECK(ne[0].imag() == 0.0);
  CHECK(sw[0].real() > 0.0);
  CHECK(sw[0].imag() == 0.0);

  CHECK(near(bloch_of(projector_from_vector(ne)), {kR, 0.0, kR}, kAlgebraTol));
  CHECK(near(bloch_of(projector_from_vector(sw)), {-kR, 0.0, -kR}, kAlgebraTol));
}

TEST_CASE("density_of") {
  const Ensemble single({Branch(1.0, PureComposite(tensor(spin_up(), ket_beta())))});
  const ComplexMatrix pi = density_of(single);
  CHECK(max_abs_diff(pi * pi, pi) < kAlgebraTol);

  const Ensemble updown = make_classical_correlated(0.5, spin_up(), ket_alpha(), spin_down(), ket_beta());
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;  // |up alpha>
  expected(3, 3) = 0.5;  // |down beta>
  CHECK(max_abs_diff(density_of(updown), expected) < kAlgebraTol);
}

TEST_CASE("same reduced density, different composite density") {
  const auto [ne, sw] = diag_eigenstates();
  const Ensemble updown = make_classical_correlated(0.5, spin_up(), ket_alpha(), spin_down(), ket_beta());
  const Ensemble diagonal = make_classical_correlated(0.5, ne, ket_alpha(), sw, ket_beta());
  CHECK(max_abs_diff(density_of(updown), density_of(diagonal)) > 0.1);
  CHECK(max_abs_diff(partial_trace_R(density_of(updown)), partial_trace_R(density_of(diagonal))) < kAlgebraTol);
  CHECK(max_abs_diff(partial_trace_R(density_of(updown)), Complex(0.5) * ComplexMatrix::identity(2)) <
        kAlgebraTol);
}

TEST_CASE("reduced Bloch vector of S") {
  const auto [ne, sw] = diag_eigenstates();
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const WeightedVector rho[] = {{p, ne}, {1.0 - p, sw}};
    const WeightedVector mu[] = {{1.0, ket_alpha()}};
    const double m = (2.0 * p - 1.0) * kR;
    CAPTURE(p);
    CHECK(near(reduced_bloch_S(make_product_uncorrelated(rho, mu)), {m, 0.0, m}, kAlgebraTol));
  }
  CHECK(near(reduced_bloch_S(Ensemble({Branch(1.0, singlet())})), {0.0, 0.0, 0.0}, kAlgebraTol));
}

TEST_CASE("conditional Bloch vector of a branch") {
  const auto [ne, sw] = diag_eigenstates();
  CHECK(near(conditional_bloch_S(Branch(0.5, PureComposite(tensor(ne, ket_alpha())))), {kR, 0.0, kR}, kAlgebraTol));
  CHECK(near(conditional_bloch_S(Branch(0.5, PureComposite(tensor(spin_down(), ket_beta())))), {0.0, 0.0, -1.0},
             kAlgebraTol));
  CHECK_THROWS_AS(conditional_bloch_S(Branch(1.0, singlet())), NotProduct);

  // Matches the textbook spinor formula for random product branches.
  SeededRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexVector s = random_normalized(rng, 2);
    const ComplexVector r = random_normalized(rng, 2);
    const BlochVector b = conditional_bloch_S(Branch(1.0, PureComposite(tensor(s, r))));
    CHECK(near(b, oracle::bloch_of_spinor(s[0], s[1]), 1e-12));
    CHECK(std::abs(b.norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("ensemble invariants on random ensembles") {
  SeededRng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Ensemble e = random_ensemble(rng);
    const ComplexMatrix pi = density_of(e);
    CHECK(std::abs(trace(pi) - 1.0) < 1e-12);
    CHECK(is_hermitian(pi));
    CHECK(reduced_bloch_S(e).norm() <= 1.0 + 1e-10);
  }
}

TEST_CASE("reduced Bloch equals the weighted branch average for product ensembles") {
  SeededRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 4);
    std::vector<Branch> branches;
    for (int i = 0; i < n; ++i) {
      branches.emplace_back(1.0 / n,
                            PureComposite(tensor(random_normalized(rng, 2), random_normalized(rng, 2))));
    }
    const Ensemble e(std::move(branches));
    BlochVector avg;
    for (const auto& b : e.branches()) avg = avg + b.weight() * conditional_bloch_S(b);
    CHECK(near(reduced_bloch_S(e), avg, 1e-12));
  }
}

TEST_CASE("make_product_uncorrelated") {
  const auto [ne, sw] = diag_eigenstates();
  const WeightedVector rho[] = {{0.75, ne}, {0.25, sw}};
  const WeightedVector alpha_only[] = {{1.0, ket_alpha()}};
  CHECK(make_product_uncorrelated(rho, alpha_only).size() == 2);

  const WeightedVector one_s[] = {{1.0, spin_up()}};
  CHECK(make_product_uncorrelated(one_s, alpha_only).size() == 1);

  SeededRng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const double w = rng.uniform();
    const double u = rng.uniform();
    const WeightedVector s[] = {{w, random_normalized(rng, 2)}, {1.0 - w, random_normalized(rng, 2)}};
    const WeightedVector r[] = {{u, random_normalized(rng, 2)}, {1.0 - u, random_normalized(rng, 2)}};
    const ComplexMatrix rho_s = Complex(s[0].weight) * projector_from_vector(s[0].vector) +
                                Complex(s[1].weight) * projector_from_vector(s[1].vector);
    const ComplexMatrix mu_r = Complex(r[0].weight) * projector_from_vector(r[0].vector) +
                               Complex(r[1].weight) * projector_from_vector(r[1].vector);
    CHECK(max_abs_diff(density_of(make_product_uncorrelated(s, r)), tensor(rho_s, mu_r)) < 1e-12);
  }

  const WeightedVector bad[] = {{0.5, spin_up()}, {0.4, spin_down()}};
  CHECK_THROWS_AS(make_product_uncorrelated(bad, alpha_only), ArgumentError);
}

TEST_CASE("make_classical_correlated") {
  const auto [ne, sw] = diag_eigenstates();
  const Ensemble bar = make_classical_correlated(0.75, ne, ket_alpha(), sw, ket_beta());
  REQUIRE(bar.size() == 2);
  CHECK(bar.branches()[0].weight() == 0.75);
  CHECK(bar.branches()[1].weight() == 0.25);
  CHECK(max_abs_diff(bar.branches()[0].state().vector(), tensor(ne, ket_alpha())) == 0.0);

  const Ensemble pure = make_classical_correlated(1.0, ne, ket_alpha(), sw, ket_beta());
  CHECK(pure.size() == 1);
  const ComplexMatrix pi = density_of(pure);
  CHECK(max_abs_diff(pi * pi, pi) < kAlgebraTol);

  CHECK_THROWS_AS(make_classical_correlated(0.5, ne, ket_alpha(), sw, ket_alpha()), ArgumentError);
  CHECK_THROWS_AS(make_classical_correlated(1.5, ne, ket_alpha(), sw, ket_beta()), ArgumentError);
}

TEST_CASE("singlet") {
  const ComplexVector s = singlet().vector();
  CHECK(std::abs(inner(tensor(spin_up(), spin_up()), s)) == 0.0);

  const auto [ne, sw] = diag_eigenstates();
  const ComplexVector rotated = Complex(1.0 / std::numbers::sqrt2) * (tensor(ne, sw) - tensor(sw, ne));
  // Equal up to a global phase: |<rotated|s>| = 1.
  const Complex overlap = inner(rotated, s);
  CHECK(std::abs(std::abs(overlap) - 1.0) < kAlgebraTol);
  CHECK(max_abs_diff(overlap * rotated, s) < kAlgebraTol);
}

TEST_CASE("value invariants are enforced") {
  CHECK_THROWS_AS(PureComposite(ComplexVector{1.0, 1.0, 0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(PureComposite{spin_up()}, ArgumentError);
  CHECK_THROWS_AS(Branch(-0.1, singlet()), ArgumentError);
  CHECK_THROWS_AS(Ensemble({Branch(0.5, singlet())}), ArgumentError);
  CHECK_THROWS_AS(Ensemble(std::vector<Branch>{}), ArgumentError);
}
