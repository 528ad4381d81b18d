#include "thincode/simplex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thincode {

namespace {

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("coordinate exceeds 64 bits");
    return x.convert_to<std::int64_t>();
}

void require_positive_dim(const LatticeSimplex& s) {
    if (s.dim() < 1) throw std::invalid_argument("operation requires dimension >= 1");
}

}  // namespace

LatticeSimplex::LatticeSimplex(std::int64_t dim, std::vector<LatticePoint> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1) throw std::invalid_argument("dimension must be >= 1 (use point() for a vertex)");
    if (vertices_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("need dim + 1 vertices");
    for (const LatticePoint& v : vertices_)
        if (v.size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("vertex coordinate count must equal dim");
    if (determinant(lifted_matrix()) == 0)
        throw std::invalid_argument("vertices are affinely dependent");
}

LatticeSimplex LatticeSimplex::point() {
    LatticeSimplex p;
    p.dim_ = 0;
    p.vertices_ = {LatticePoint{}};
    return p;
}

IntegerMatrix LatticeSimplex::lifted_matrix() const {
    if (dim_ < 1) throw std::invalid_argument("point has no lifted matrix");
    const std::size_t n = static_cast<std::size_t>(dim_) + 1;
    IntegerMatrix m(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row + 1 < n; ++row) m.at(row, col) = vertices_[col][row];
        m.at(n - 1, col) = 1;
    }
    return m;
}

BigInt normalized_volume(const LatticeSimplex& s) {
    require_positive_dim(s);
    BigInt det = determinant(s.lifted_matrix());
    return det < 0 ? BigInt(-det) : det;
}

CodeOfSimplex simplex_to_code(const LatticeSimplex& s) {
    require_positive_dim(s);
    const std::size_t n = static_cast<std::size_t>(s.dim()) + 1;
    SmithDecomposition snf = smith_normal_form(s.lifted_matrix());

    BigInt volume_big = 1;
    for (const BigInt& d : snf.diag) volume_big *= d;
    if (volume_big > 2'000'000)
        throw std::runtime_error("normalized volume " + volume_big.str() +
                                 " too large to enumerate words");
    const std::int64_t volume = to_int64(volume_big);
    const std::int64_t modulus = to_int64(snf.diag.back());

    std::vector<std::int64_t> factors(n);
    for (std::size_t k = 0; k < n; ++k) factors[k] = to_int64(snf.diag[k]);

    // words are right * (t_k * N/d_k) over all t in the product of Z_{d_k}
    std::vector<std::int64_t> wmod(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            BigInt r = snf.right.at(j, k) % modulus;
            if (r < 0) r += modulus;
            wmod[j * n + k] = to_int64(r);
        }

    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(volume));
    std::vector<std::int64_t> t(n, 0);
    while (true) {
        Word w(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            if (t[k] == 0) continue;
            const std::int64_t scaled = t[k] * (modulus / factors[k]) % modulus;
            for (std::size_t j = 0; j < n; ++j)
                w[j] = (w[j] + wmod[j * n + k] * scaled) % modulus;
        }
        words.push_back(std::move(w));
        std::size_t pos = 0;
        while (pos < n && ++t[pos] == factors[pos]) t[pos++] = 0;
        if (pos == n) break;
    }
    std::sort(words.begin(), words.end());
    return CodeOfSimplex{modulus,
                         LinearCode::from_sorted_unchecked(modulus, n, std::move(words))};
}

LatticeSimplex code_to_simplex(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n < 2) throw std::invalid_argument("code needs at least two coordinates");
    {
        std::int64_t content = c.modulus();
        for (const Word& w : c.words()) content = std::gcd(content, content_gcd(w, c.modulus()));
        if (content != 1)
            throw std::invalid_argument("code is not primitive; primitivize first");
    }
    const std::int64_t modulus = c.modulus();
    GeneratingMatrix gens = generators_of(c);

    // lattice basis of the integer preimage of the code
    IntegerMatrix stacked(n + gens.row_count(), n);
    for (std::size_t j = 0; j < n; ++j) stacked.at(j, j) = modulus;
    for (std::size_t r = 0; r < gens.row_count(); ++r)
        for (std::size_t j = 0; j < n; ++j) stacked.at(n + r, j) = gens.row(r)[j];
    IntegerMatrix hnf = row_hermite_form(stacked);

    IntegerMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = hnf.at(i, j);

    // direction sublattice: combinations of basis rows with zero coordinate sum
    IntegerMatrix sums(1, n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < n; ++j) s += basis.at(i, j);
        sums.at(0, i) = s;
    }
    SmithDecomposition ker = smith_normal_form(sums);
    IntegerMatrix directions(n, n - 1);  // columns: basis of the zero-sum sublattice
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += ker.right.at(i, k) * basis.at(i, j);
            directions.at(j, k - 1) = acc;
        }

    // vertices N*e_j, expressed relative to N*e_0 in the direction basis
    std::vector<LatticePoint> vertices(n, LatticePoint(n - 1, 0));
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<BigInt> rhs(n, 0);
        rhs[0] = -modulus;
        rhs[j] = modulus;
        auto solved = solve_integer(directions, rhs);
        if (!solved) throw std::logic_error("vertex difference not in the direction lattice");
        for (std::size_t k = 0; k + 1 < n; ++k) vertices[j][k] = to_int64((*solved)[k]);
    }

    // normalize: Hermite-reduce the matrix whose columns are the vertices
    const std::size_t d = n - 1;
    IntegerMatrix vert_cols(d, d);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) vert_cols.at(i, j - 1) = vertices[j][i];
    IntegerMatrix reduced = row_hermite_form(vert_cols);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) vertices[j][i] = to_int64(reduced.at(i, j - 1));

    LatticeSimplex result(static_cast<std::int64_t>(d), std::move(vertices));
    if (normalized_volume(result) != static_cast<std::int64_t>(c.word_count()))
        throw std::logic_error("reconstructed simplex volume does not match the code size");
    return result;
}

std::vector<std::int64_t> quotient_group(const LatticeSimplex& s) {
    require_positive_dim(s);
    SmithDecomposition snf = smith_normal_form(s.lifted_matrix());
    std::vector<std::int64_t> factors;
    for (const BigInt& d : snf.diag)
        if (d > 1) factors.push_back(to_int64(d));
    return factors;
}

PointProfile point_profile(const LatticeSimplex& s) {
    require_positive_dim(s);
    const LinearCode code = simplex_to_code(s).code;
    const std::int64_t boundary_like = hstar(code).coeff(1);
    const std::int64_t interior = lstar(code).coeff(1);
    PointProfile p;
    p.total_lattice_points = s.dim() + 1 + boundary_like;
    p.interior_points = interior;
    p.is_empty = boundary_like == 0;
    p.is_hollow = interior == 0;
    return p;
}

LatticeSimplex free_join(const LatticeSimplex& a, const LatticeSimplex& b) {
    const std::size_t da = static_cast<std::size_t>(a.dim());
    const std::size_t db = static_cast<std::size_t>(b.dim());
    const std::size_t d = da + db + 1;
    std::vector<LatticePoint> vertices;
    vertices.reserve(d + 1);
    for (const LatticePoint& v : a.vertices()) {
        LatticePoint p(d, 0);
        std::copy(v.begin(), v.end(), p.begin());
        vertices.push_back(std::move(p));
    }
    for (const LatticePoint& w : b.vertices()) {
        LatticePoint p(d, 0);
        std::copy(w.begin(), w.end(), p.begin() + static_cast<std::ptrdiff_t>(da));
        p[d - 1] = 1;
        vertices.push_back(std::move(p));
    }
    return LatticeSimplex(static_cast<std::int64_t>(d), std::move(vertices));
}

WidthReport width_report(const LatticeSimplex& s, std::int64_t bound) {
    require_positive_dim(s);
    if (bound < 1) throw std::invalid_argument("functional bound must be >= 1");
    const std::size_t d = static_cast<std::size_t>(s.dim());

    WidthReport report;
    report.is_width_one = cayley_partition(generators_of(simplex_to_code(s).code)).size() >= 2;

    LatticePoint u(d, -bound);
    bool have = false;
    while (true) {
        bool zero = std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; });
        if (!zero) {
            std::int64_t lo = 0, hi = 0;
            bool first = true;
            for (const LatticePoint& v : s.vertices()) {
                std::int64_t val = 0;
                for (std::size_t i = 0; i < d; ++i) val += u[i] * v[i];
                if (first) {
                    lo = hi = val;
                    first = false;
                } else {
                    lo = std::min(lo, val);
                    hi = std::max(hi, val);
                }
            }
            if (!have || hi - lo < report.width_upper) {
                report.width_upper = hi - lo;
                report.certificate = u;
                have = true;
            }
        }
        std::size_t pos = 0;
        while (pos < d && ++u[pos] == bound + 1) u[pos++] = -bound;
        if (pos == d) break;
    }
    return report;
}

}  // namespace thincode
