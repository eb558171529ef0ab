#include "freybound/hplus.hpp"

#include <sstream>
#include <stdexcept>

#include "freybound/exact_arith.hpp"

namespace freybound {

std::optional<BigInt> hplus_builtin(unsigned long r) {
    if (r < 3 || r > 151 || !is_prime(BigInt(static_cast<long>(r)))) return std::nullopt;
    return BigInt(1);
}

std::map<unsigned long, BigInt> parse_hplus_table(const std::string& text) {
    std::map<unsigned long, BigInt> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string rtok, vtok;
        if (!(ls >> rtok)) continue;
        if (!(ls >> vtok))
            throw std::invalid_argument("hplus table: line " + std::to_string(lineno) +
                                        " has no value");
        unsigned long r = std::stoul(rtok);
        BigInt v = bigint_from_string(vtok);
        if (v <= 0)
            throw std::invalid_argument("hplus table: line " + std::to_string(lineno) +
                                        " has a non-positive value");
        out[r] = v;  // rest of the line is a free-form source note
    }
    return out;
}

}  // namespace freybound
