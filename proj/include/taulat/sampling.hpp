#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "taulat/lattice_eval.hpp"

namespace taulat {

using Rng = std::mt19937_64;

// Deterministic stream seed for a named sweep.
std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index);

// Small rationals keep the exact arithmetic in the identities compact.
Rational random_rational(Rng& g, int max_num = 4, int max_den = 3);
Rational random_nonzero_rational(Rng& g, int max_num = 4, int max_den = 3);

std::vector<Rational> random_distinct_rationals(Rng& g, int count, bool positive = false);

Matrix random_matrix(Rng& g, int rows, int cols);
Matrix random_symmetric_matrix(Rng& g, int k);
GrassmannianElement random_element(Rng& g, int k, int n);

TimeVector random_time_vector(Rng& g, int truncation);

// Random point of A supported on [lo, hi] with entries in [-max_coeff, max_coeff].
LatticePoint random_a_point(Rng& g, int lo, int hi, int max_coeff = 1);
// Random point of B spanned by beta_1..beta_count.
LatticePoint random_b_point(Rng& g, int count, int max_coeff = 1);

XParameters random_x_parameters(Rng& g, int lo, int hi);
YParameters random_y_parameters(Rng& g, int count);

// All Plucker relation index pairs (I, J) with strictly increasing entries in
// [-k, n-k-1], |I| = k-1, |J| = k+1.
std::vector<std::pair<MultiIndex, MultiIndex>> all_plucker_relation_indices(int k, int n);
// The three-term ones: I = C + {e}, J = C + {d1,d2,d3} with e outside J.
std::vector<std::pair<MultiIndex, MultiIndex>> short_plucker_relation_indices(int k, int n);

} // namespace taulat
