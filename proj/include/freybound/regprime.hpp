#ifndef FREYBOUND_REGPRIME_HPP
#define FREYBOUND_REGPRIME_HPP

#include <vector>

#include "freybound/numbers.hpp"

namespace freybound {

// B_0..B_n as exact rationals, convention B_1 = -1/2.
struct BernoulliTable {
    std::vector<Rational> values;
    const Rational& at(std::size_t k) const { return values.at(k); }
    std::size_t upto() const { return values.size() - 1; }
};

// Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
BernoulliTable bernoulli_upto(std::size_t n);

struct RegularityResult {
    bool regular = false;
    // even k in [2, r-3] with r dividing the numerator of B_k
    std::vector<unsigned long> irregular_indices;
};

// Kummer's criterion: r is regular iff r divides no numerator of
// B_2, B_4, ..., B_{r-3}. Exact rational arithmetic throughout.
RegularityResult is_regular(unsigned long r);

}  // namespace freybound

#endif
