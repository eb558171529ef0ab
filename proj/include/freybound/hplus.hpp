#ifndef FREYBOUND_HPLUS_HPP
#define FREYBOUND_HPLUS_HPP

#include <map>
#include <optional>
#include <string>

#include "freybound/numbers.hpp"

namespace freybound {

// Class-group exponent h'_K of K = Q(zeta_r)^+. These values are external
// data, not computed by this tool: the shipped table asserts h'_K = 1 for
// primes r <= 151, and every report records the value actually used.
std::optional<BigInt> hplus_builtin(unsigned long r);

// Parses the plain-text table format: one entry per line, "r value note...".
std::map<unsigned long, BigInt> parse_hplus_table(const std::string& text);

}  // namespace freybound

#endif
