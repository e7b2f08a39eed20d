// Explicit cutting blocking sets and the minimal codes they define:
// the tetrahedron (union of the edges of a coordinate simplex), the
// dimension-4 and pentagonal/hexagonal dimension-5 configurations, and the
// simplex code as a reference. Every constructor checks its predicted
// parameters against the built code and throws std::logic_error on mismatch.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcode/correspond.hpp"
#include "cutcode/minimal.hpp"

namespace cutcode {

struct CodeParams {
    std::size_t n = 0, k = 0, d = 0;
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline std::string to_string(const CodeParams& p, unsigned q) {
    std::ostringstream os;
    os << '[' << p.n << ',' << p.k << ',' << p.d << "]_" << q;
    return os.str();
}

struct ConstructionResult {
    std::string name;   // tetrahedron | dim4 | pentagonal | hexagonal | simplex
    std::string label;  // name plus parameters
    ProjectiveSystem system;
    LinearCode code;
    CodeParams predicted;
    std::optional<WeightDistribution> predicted_distribution;

    CodeParams measured() const { return {code.n(), code.k(), code.min_distance()}; }
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint64_t binom(unsigned n, unsigned r) {
    if (r > n) return 0;
    std::uint64_t out = 1;
    for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

inline Vec unit(std::size_t len, std::size_t i) {
    Vec e(len, 0);
    e[i] = 1;
    return e;
}

inline void add_line(const ProjectiveSpace& s, PointSet& set, const Vec& a, const Vec& b) {
    for (const auto& p : line_through(s, s.normalize(a), s.normalize(b))) set.set(p.index);
}

inline ConstructionResult finish(std::string name, std::string label, const SpacePtr& space, const PointSet& set,
                                 CodeParams predicted, std::optional<WeightDistribution> predicted_wd = std::nullopt) {
    auto system = ProjectiveSystem::from_set(space, set);
    LinearCode code = psi(system);
    ConstructionResult r{std::move(name), std::move(label), system, code, predicted, std::move(predicted_wd)};
    auto fail = [&](const std::string& what) { throw std::logic_error(r.label + ": " + what); };
    if (!is_nondegenerate(r.code)) fail("degenerate code");
    if (!is_cutting(*space, set)) fail("point set is not cutting");
    const CodeParams m = r.measured();
    if (!(m == predicted))
        fail("built " + to_string(m, space->field().q()) + ", predicted " + to_string(predicted, space->field().q()));
    if (r.predicted_distribution && !(*r.predicted_distribution == r.code.weight_distribution()))
        fail("weight distribution differs from the closed form");
    return r;
}

}  // namespace detail

/// Hyperplanes of PG(k-1,q) avoiding r points in general position: q^(k-r) (q-1)^(r-1).
inline std::uint64_t count_avoiding_hyperplanes(unsigned q, unsigned k, unsigned r) {
    if (r < 1 || r > k) throw std::invalid_argument("count_avoiding_hyperplanes: need 1 <= r <= k");
    return detail::ipow(q, k - r) * detail::ipow(q - 1, r - 1);
}

/// Hyperplanes containing P1..Ps and avoiding P(s+1)..Pk of a basis: (q-1)^(k-s-1).
inline std::uint64_t count_containing_avoiding(unsigned q, unsigned k, unsigned s) {
    if (s < 1 || s >= k) throw std::invalid_argument("count_containing_avoiding: need 1 <= s < k");
    return detail::ipow(q - 1, k - s - 1);
}

/// Weight of the tetrahedron codewords whose hyperplane contains exactly r of the k vertices:
/// (k-r)((k+r-1)q - 2k + 4) / 2.
inline std::uint64_t predicted_tetrahedron_weight(unsigned q, unsigned k, unsigned r) {
    if (k < 2 || r >= k) throw std::invalid_argument("predicted_tetrahedron_weight: need 0 <= r <= k-1");
    const std::int64_t kk = k, rr = r, qq = q;
    return static_cast<std::uint64_t>((kk - rr) * ((kk + rr - 1) * qq - 2 * kk + 4) / 2);
}

/// A_0 = 1, A_i = sum over r with f(r) = i of C(k,r) (q-1)^(k-r).
inline WeightDistribution predicted_tetrahedron_distribution(unsigned q, unsigned k) {
    const std::size_t n = detail::binom(k, 2) * (q - 1) + k;
    WeightDistribution wd{q, n, k, std::vector<std::uint64_t>(n + 1, 0)};
    wd.A[0] = 1;
    for (unsigned r = 0; r < k; ++r)
        wd.A[predicted_tetrahedron_weight(q, k, r)] += detail::binom(k, r) * detail::ipow(q - 1, k - r);
    return wd;
}

/// Union of the C(k,2) lines joining the standard basis points of PG(k-1,q).
inline ConstructionResult tetrahedron(unsigned q, unsigned k) {
    if (k < 2) throw std::invalid_argument("tetrahedron: need k >= 2");
    auto space = projective_space(static_cast<int>(k) - 1, q);
    PointSet set = space->empty_set();
    if (k == 2) {
        detail::add_line(*space, set, detail::unit(k, 0), detail::unit(k, 1));
    } else {
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = i + 1; j < k; ++j) detail::add_line(*space, set, detail::unit(k, i), detail::unit(k, j));
    }
    auto wd = predicted_tetrahedron_distribution(q, k);
    const CodeParams predicted{wd.n, k, wd.min_weight()};
    return detail::finish("tetrahedron", "tetrahedron q=" + std::to_string(q) + " k=" + std::to_string(k), space, set, predicted,
                          std::move(wd));
}

/// Four lines P1P2, P2P3, P3P4, P4P1 of the coordinate frame of PG(3,q) plus
/// the q-1 points [1, beta, a, beta a], a != 0.
inline ConstructionResult dim4_construction(unsigned q, Elem beta) {
    auto space = projective_space(3, q);
    const auto& f = space->field();
    if (beta == 0) throw std::invalid_argument("dim4: beta must be nonzero");
    if (!f.contains(beta)) throw std::invalid_argument("dim4: beta not in GF(q)");
    PointSet set = space->empty_set();
    for (std::size_t i = 0; i < 4; ++i) detail::add_line(*space, set, detail::unit(4, i), detail::unit(4, (i + 1) % 4));
    for (auto a : f.units()) set.set(space->index_of({1, beta, a, f.mul(beta, a)}));
    const CodeParams predicted{5 * q - 1, 4, 3 * q - 2};
    auto r = detail::finish("dim4", "dim4 q=" + std::to_string(q) + " beta=" + std::to_string(beta), space, set, predicted);
    if (!is_minimal_cutting(*space, set)) throw std::logic_error(r.label + ": point set is not minimal cutting");
    return r;
}

/// Pentagon of lines P_iP_(i+1) (mod 5) in PG(4,q) plus m1 = Q1Q3, m2 = Q2Q4,
/// m3 = Q1Q4 for points Q_i on the first four sides. Default Q_i = P_i + P_(i+1).
inline ConstructionResult pentagonal(unsigned q, std::optional<std::array<Vec, 4>> choices = std::nullopt) {
    auto space = projective_space(4, q);
    const auto& f = space->field();
    std::array<Vec, 4> qs;
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec pi = detail::unit(5, i), pj = detail::unit(5, i + 1);
        if (choices) {
            const Vec& c = (*choices)[i];
            if (c.size() != 5) throw std::invalid_argument("pentagonal: Q" + std::to_string(i + 1) + " has wrong length");
            for (std::size_t t = 0; t < 5; ++t)
                if (!f.contains(c[t])) throw std::invalid_argument("pentagonal: Q" + std::to_string(i + 1) + " has entries outside GF(q)");
            bool on_line = true;
            for (std::size_t t = 0; t < 5; ++t)
                if (t != i && t != i + 1 && c[t] != 0) on_line = false;
            if (!on_line) throw std::invalid_argument("pentagonal: Q" + std::to_string(i + 1) + " is not on its side");
            if (c[i] == 0 || c[i + 1] == 0)
                throw std::invalid_argument("pentagonal: Q" + std::to_string(i + 1) + " coincides with a vertex");
            qs[i] = c;
        } else {
            qs[i] = pi;
            qs[i][i + 1] = 1;
        }
    }
    PointSet set = space->empty_set();
    for (std::size_t i = 0; i < 5; ++i) detail::add_line(*space, set, detail::unit(5, i), detail::unit(5, (i + 1) % 5));
    detail::add_line(*space, set, qs[0], qs[2]);
    detail::add_line(*space, set, qs[1], qs[3]);
    detail::add_line(*space, set, qs[0], qs[3]);
    const std::string label = "pentagonal q=" + std::to_string(q);
    if (set.count() != 8 * q - 3)
        throw std::logic_error(label + ": configuration has " + std::to_string(set.count()) + " points, expected " +
                               std::to_string(8 * q - 3));
    return detail::finish("pentagonal", label, space, set, {8 * q - 3, 5, 4 * q - 3});
}

/// Hexagon of lines through the frame P1..P5, P6 = [1,1,1,1,1] of PG(4,2) plus Q = [1,0,1,0,1].
inline ConstructionResult hexagonal_q2() {
    auto space = projective_space(4, 2);
    std::array<Vec, 6> frame;
    for (std::size_t i = 0; i < 5; ++i) frame[i] = detail::unit(5, i);
    frame[5] = Vec(5, 1);
    PointSet set = space->empty_set();
    for (std::size_t i = 0; i < 6; ++i) detail::add_line(*space, set, frame[i], frame[(i + 1) % 6]);
    set.set(space->index_of({1, 0, 1, 0, 1}));
    return detail::finish("hexagonal", "hexagonal q=2", space, set, {13, 5, 5});
}

/// Every point of PG(k-1,q): the constant-weight simplex code.
inline ConstructionResult simplex(unsigned q, unsigned k) {
    if (k < 2) throw std::invalid_argument("simplex: need k >= 2");
    auto space = projective_space(static_cast<int>(k) - 1, q);
    PointSet set = space->empty_set();
    set.set();
    const CodeParams predicted{static_cast<std::size_t>(theta(q, static_cast<int>(k) - 1)), k, static_cast<std::size_t>(detail::ipow(q, k - 1))};
    return detail::finish("simplex", "simplex q=" + std::to_string(q) + " k=" + std::to_string(k), space, set, predicted);
}

}  // namespace cutcode
