#ifndef FREYBOUND_WEIL_TRACES_HPP
#define FREYBOUND_WEIL_TRACES_HPP

#include <string>
#include <variant>
#include <vector>

#include "freybound/cyclofield.hpp"

namespace freybound {

// Candidate Frobenius trace: a rational integer or a totally real
// algebraic integer in Z[psi].
using Trace = std::variant<BigInt, NFElem>;

enum class TraceMode { rational, field, curve_derived };
enum class Provenance { enumerated, curve_derived };

struct TraceEntry {
    Trace value;
    Provenance provenance = Provenance::enumerated;
};

// The finite candidate set of Frobenius traces at a place of norm-power Q.
// Every element satisfies |sigma(a)| <= 2 sqrt(Q) under all embeddings;
// elements are pairwise distinct and deterministically ordered.
struct WeilTraceSet {
    BigInt Q;
    unsigned long f = 1;
    TraceMode mode = TraceMode::rational;
    FieldPtr field;  // null in rational mode
    std::vector<TraceEntry> elements;
};

// All a in Z with a^2 <= 4Q, ascending. Q >= 2.
WeilTraceSet enum_rational_traces(const BigInt& Q);

// All a in Z[psi] whose embeddings all lie in [-2 sqrt Q, 2 sqrt Q].
// The coordinate search box comes from exact Cramer bounds on the trace
// Gram matrix; candidates are filtered by the exact conjugate check and
// returned in lexicographic coordinate order regardless of worker count.
WeilTraceSet enum_field_traces(const FieldPtr& field, const BigInt& Q, unsigned workers = 1);

// The per-coordinate half-widths of the search box used above (exposed so
// tests can run a strictly wider brute-force oracle).
std::vector<BigInt> field_trace_box(const FieldPtr& field, const BigInt& Q);

// prod_{j=1..g} (x^2 - sigma_j(a) x + Q), monic of degree 2g
// (degree 2 with g = 1 in rational mode).
IntPoly trace_charpoly(const Trace& a, const BigInt& Q);

// Degree-g polynomial T with P(x) = x^g T(x + Q/x); throws
// std::invalid_argument when P violates the functional equation.
IntPoly weil_trace_poly(const IntPoly& P, const BigInt& Q);

// Monic even-degree P with the functional equation, totally real trace
// polynomial, and every trace within [-2 sqrt Q, 2 sqrt Q]: exactly the
// charpolys with all complex roots of absolute value sqrt(Q).
bool is_weil_charpoly(const IntPoly& P, const BigInt& Q);

// Exponent of GL_n(Z/p^k) by the structural formula
// p^(k-1+ceil(log_p n)) * lcm_{1<=d<=n} (p^d - 1).
BigInt gl_exponent(unsigned long n, unsigned long p, unsigned long k);

// Even multiple of every inertial exponent possible for a g-dimensional
// variety acquiring semistable reduction over the 12-torsion field:
// 2 * lcm(exp GL_2g(Z/4), exp GL_2g(Z/3)).
BigInt inertial_exponent_bound(unsigned long g);

std::string trace_to_string(const Trace& t);
bool trace_equal(const Trace& a, const Trace& b);

}  // namespace freybound

#endif
