#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "permcf/paths.hpp"
#include "permcf/poly.hpp"

namespace permcf {

enum class CFKind { S, J, T };
std::string_view to_string(CFKind k);
CFKind cf_kind_from_string(std::string_view s);

// Continued fraction truncated at `depth` levels.
//   S: 1/(1 - a1 t/(1 - a2 t/(1 - ...)))
//   J: 1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(1 - ...)))
//   T: 1/(1 - d1 t - a1 t/(1 - d2 t - a2 t/(1 - ...)))
// Vectors are indexed by the subscript; slot 0 of alpha, beta and delta is unused.
struct CFSpec {
    CFKind kind = CFKind::S;
    int depth = 0;
    std::vector<Poly> alpha, beta, gamma, delta;

    explicit CFSpec(CFKind k = CFKind::S, int d = 0);

    // Coefficient accessors; zero past the depth.
    Poly a(int k) const;
    Poly b(int k) const;
    Poly g(int k) const;
    Poly dl(int k) const;
};

// Coefficients t^0..t^N by dynamic programming over height-bounded paths.
Series expand(const CFSpec& cf, int N);
// Same, by the bottom-up truncated continued-fraction recursion with series inversion.
Series expand_recursive(const CFSpec& cf, int N);

// Step weights by starting height. `level` is used by Motzkin paths and
// `long_level` by Schroder paths.
struct WeightScheme {
    std::function<Poly(int)> rise, fall, level, long_level;
};

// Flajolet path interpretation of the fraction: rises weigh 1, a fall from
// height h weighs alpha_h (S, T) or beta_h (J), a level at h weighs gamma_h,
// a long level at h weighs delta_{h+1}.
WeightScheme to_weight_scheme(const CFSpec& cf);
PathKind path_kind_for(CFKind k);

// Literal sum over all paths, collected by semi-length (Dyck, Schroder) or
// length (Motzkin).
Series path_sum(PathKind kind, const WeightScheme& w, int N);

// Each step at height h has a finite label set; each label carries its own weight.
struct LabelledWeightScheme {
    std::function<int(Step, int)> label_count;
    std::function<Poly(Step, int, int)> weight;
};
Series path_sum_labelled(PathKind kind, const LabelledWeightScheme& w, int N);
// Splits each step weight of a plain scheme into its terms, one label per term.
LabelledWeightScheme split_by_terms(const WeightScheme& w);

std::vector<mpz_class> series_integers(const Series& s);
std::vector<mpz_class> factorials(int N);
std::vector<mpz_class> genocchi(int N);
std::vector<mpz_class> median_genocchi(int N);
// h_n from the alternating binomial sum over g; h_0 = 1 by convention.
std::vector<mpz_class> median_from_genocchi(int N);

CFSpec factorial_cf(int depth);
CFSpec genocchi_cf(int depth);
CFSpec median_genocchi_cf(int depth);

}  // namespace permcf
