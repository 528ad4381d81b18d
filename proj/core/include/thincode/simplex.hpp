#pragma once

#include <cstdint>
#include <vector>

#include "thincode/code.hpp"
#include "thincode/intlin.hpp"

namespace thincode {

using LatticePoint = std::vector<std::int64_t>;

// Simplex with integer vertices spanning R^d. A zero-dimensional point is
// admitted only as a free_join factor (pyramids); every other operation
// requires dim >= 1.
class LatticeSimplex {
public:
    // dim + 1 vertices, each with dim coordinates, affinely independent.
    LatticeSimplex(std::int64_t dim, std::vector<LatticePoint> vertices);

    static LatticeSimplex point();

    std::int64_t dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }

    // (dim+1) x (dim+1), column i = (v_i, 1). Requires dim >= 1.
    IntegerMatrix lifted_matrix() const;

    bool operator==(const LatticeSimplex&) const = default;

private:
    LatticeSimplex() = default;
    std::int64_t dim_ = 0;
    std::vector<LatticePoint> vertices_;
};

// |det| of the lifted vertex matrix; always >= 1 for a valid simplex.
BigInt normalized_volume(const LatticeSimplex& s);

struct CodeOfSimplex {
    std::int64_t modulus;  // exponent of the quotient group
    LinearCode code;
};

// The word group of the simplex: all tuples over Z_N killing the lifted
// vertex columns, N the largest invariant factor. Word count equals the
// normalized volume, so volume is capped (throws beyond a few million).
CodeOfSimplex simplex_to_code(const LatticeSimplex& s);

// A simplex whose code is column-permutation equivalent to the input, built
// from a lattice basis of the preimage of the code; coordinates are
// normalized (vertex 0 at the origin, Hermite-reduced vertex matrix), and
// only defined up to unimodular equivalence. Requires a primitive code with
// at least two coordinates.
LatticeSimplex code_to_simplex(const LinearCode& c);

// Invariant factors (> 1) of Z^{d+1} by the lifted vertex columns, ascending
// divisor chain; the product is the normalized volume.
std::vector<std::int64_t> quotient_group(const LatticeSimplex& s);

struct PointProfile {
    std::int64_t total_lattice_points = 0;
    std::int64_t interior_points = 0;
    bool is_empty = false;   // no lattice points besides the vertices
    bool is_hollow = false;  // no interior lattice points
};

PointProfile point_profile(const LatticeSimplex& s);

// conv(a x {0} x {0}, {0} x b x {1}) in dimension dim(a) + dim(b) + 1.
// A point factor gives the pyramid over the other factor. Height censuses of
// the factors multiply.
LatticeSimplex free_join(const LatticeSimplex& a, const LatticeSimplex& b);

struct WidthReport {
    bool is_width_one = false;       // exact, decided through the code
    std::int64_t width_upper = 0;    // best value among scanned functionals
    LatticePoint certificate;        // functional achieving width_upper
};

// is_width_one is exact; width_upper minimizes max-min of u over the
// vertices across nonzero functionals with |u_i| <= bound. Rejects bound 0.
WidthReport width_report(const LatticeSimplex& s, std::int64_t bound = 3);

}  // namespace thincode
