#pragma once

// End-to-end verification suites. Each returns a pass/fail verdict with a
// one-line summary of what was checked.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fim/monomial.hpp"

namespace fim::suites {

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Rewriting closure under each relation family (default slack) agrees with
/// the embedding partition on all words of length <= max_length, and the
/// class count matches the number of canonical triples with a word that short.
Result normal_form(std::size_t max_length, std::size_t expected_words, double time_limit_seconds);

/// m m* m = m, m* m m* = m*, star is an involutive anti-homomorphism,
/// idempotents (exactly those with i + k = j) commute; all monomials with j <= jmax.
Result monoid_laws(Exponent jmax);

/// Reduction rules for l_i and r_i (i <= index_bound), products of
/// projections (i, j <= product_bound) and the central idempotents
/// p_n (n <= idempotent_bound), over Q and F_5.
Result algebra_identities(Exponent index_bound, Exponent product_bound, Exponent idempotent_bound);

/// Projection-basis terms with parameters <= term_bound are independent on
/// the truncation V_1 + ... + V_N, and conversion round-trips on `samples`
/// random elements with j <= element_j.
Result projection_basis(Exponent term_bound, Exponent n_max, std::size_t samples, Exponent element_j,
                        std::uint64_t seed);

/// Random matrices (dims 1..max_dim) over Q (entries -3..3) and F_5; the
/// solver's output passes the relation check up to dim + extra_j plus the
/// inverse-pair identities. `per_field` matrices over each field.
Result matrix_solver(std::size_t per_field, std::size_t max_dim, std::size_t extra_j, std::uint64_t seed,
                     double time_limit_seconds);

/// Every endomap of sets of the given sizes; relations up to size + 1.
Result set_solver(const std::vector<std::size_t>& sizes);

/// The operator gallery on the space with the extra vector b_+, and the
/// symbolic identities of y' = y + x^{m-1} l_1 r_m.
Result counterexample_gallery(Exponent gallery_n, std::size_t power_bound, Exponent repair_n,
                              std::size_t repair_j, std::size_t yprime_i, Exponent yprime_m);

/// The first i where ker(x) ∩ im(x^i) stops shrinking on the truncation
/// N = failure_n is expected_first_failure, and l_i, r_i cut out complements
/// for i <= i_max on N = complement_n.
Result faithfulness(Exponent failure_n, std::size_t expected_first_failure, std::size_t i_max,
                    Exponent complement_n);

std::string format(const Result& r);

}  // namespace fim::suites
