#include "freybound/regprime.hpp"

#include <stdexcept>

#include "freybound/exact_arith.hpp"

namespace freybound {

BernoulliTable bernoulli_upto(std::size_t n) {
    BernoulliTable table;
    table.values.resize(n + 1);
    table.values[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        if (m % 2 == 1 && m > 1) {
            table.values[m] = Rational(0);
            continue;
        }
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j) {
            if (table.values[j] == 0) continue;
            acc += Rational(binomial(static_cast<unsigned long>(m) + 1,
                                     static_cast<unsigned long>(j))) *
                   table.values[j];
        }
        table.values[m] = -acc / Rational(BigInt(static_cast<long>(m) + 1));
        table.values[m].canonicalize();
    }
    return table;
}

RegularityResult is_regular(unsigned long r) {
    if (r < 3 || !is_prime(BigInt(static_cast<long>(r))))
        throw std::invalid_argument("is_regular: r must be an odd prime");
    RegularityResult res;
    if (r == 3) {
        res.regular = true;  // empty index range
        return res;
    }
    BernoulliTable table = bernoulli_upto(r - 3);
    for (unsigned long k = 2; k <= r - 3; k += 2) {
        const BigInt& num = table.at(k).get_num();
        if (mpz_divisible_ui_p(num.get_mpz_t(), r)) res.irregular_indices.push_back(k);
    }
    res.regular = res.irregular_indices.empty();
    return res;
}

}  // namespace freybound
