// Copyright 2026 The framekernel Authors
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

// Reproducible constructions of frames, weights and test operators.
// Every generator is a pure function of its arguments (including the seed).

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "framekernel/frames.hpp"
#include "framekernel/numeric.hpp"

namespace framekernel {

/// Standard basis of C^d on a linear index set.
Frame onb(std::size_t d);

/// The three unit vectors at 120 degrees in R^2, as a frame of C^2.
Frame mercedes();

/// {e1, e1, e2, ..., e_d}: the standard basis with the first vector repeated.
Frame repeated_first_basis(std::size_t d);

/// Gabor system g_{m,n}[t] = exp(2 pi i m b t / N) window[(t - n a) mod N]
/// for n < N/a, m < N/b, indexed by the grid (m, n) with the cyclic max
/// metric. The window is used as given.
Frame finite_gabor(std::size_t length, std::size_t time_step, std::size_t freq_step,
                   const ComplexVector& window);

/// exp(-pi d_c(t)^2 / N), d_c the cyclic distance to 0. Not normalized.
ComplexVector gaussian_window(std::size_t length);

/// psi_i = e_i + eps * sum_j xi_ij (1 + |i - j|)^{-s} e_j with xi_ij uniform
/// on the complex unit disk. If the result is not a frame eps is halved, at
/// most three times, before PreconditionError is thrown.
Frame decaying_perturbation(std::size_t d, double decay, double amplitude, std::uint64_t seed);

struct DenseKind {};
struct BandedKind {
  std::size_t width = 0;
};
struct LowRankKind {
  std::size_t rank = 1;
};
using OperatorKind = std::variant<DenseKind, BandedKind, LowRankKind>;

/// rows x cols operator with entries from the unit disk. Banded operators
/// vanish where |r - c| > width; low-rank ones are products of rows x r and
/// r x cols dense factors.
ComplexMatrix random_operator(std::size_t rows, std::size_t cols, const OperatorKind& kind,
                              std::uint64_t seed);

/// Haar-like random unitary (QR of a disk matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// Generator request as accepted by the command-line `gen` verb:
///   {"kind": "onb", "dim": d}
///   {"kind": "mercedes"}
///   {"kind": "gabor", "N": n, "a": a, "b": b, "window": "gaussian"|"delta"|"ones"|[...]}
///   {"kind": "decaying_perturbation", "dim": d, "s": s, "eps": e, "seed": n}
///   {"kind": "random_operator", "rows": r, "cols": c, "op": "dense"|"banded"|"lowrank",
///    "width": w, "rank": r, "seed": n}
/// The result is a frame JSON or, for random_operator, a matrix JSON.
nlohmann::json generate(const nlohmann::json& spec);

}  // namespace framekernel
