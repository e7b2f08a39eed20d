// Codes <-> projective systems, and the blocking-set predicates that decide
// minimality geometrically.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcode/code.hpp"
#include "cutcode/pg.hpp"

namespace cutcode {

/// Points of PG(k-1,q) with positive multiplicities, not all on a hyperplane.
class ProjectiveSystem {
   public:
    ProjectiveSystem(SpacePtr space, std::map<std::size_t, unsigned> mult) : space_(std::move(space)), mult_(std::move(mult)) {
        for (const auto& [p, m] : mult_) {
            if (p >= space_->size()) throw std::out_of_range("system: point index " + std::to_string(p) + " out of range");
            if (m == 0) throw std::invalid_argument("system: multiplicities must be positive");
            n_ += m;
        }
        if (space_->rank_of(support()) != space_->vec_len())
            throw std::invalid_argument("system: points lie in a hyperplane (not spanning)");
    }

    /// Multiplicity-one system on a point set.
    static ProjectiveSystem from_set(SpacePtr space, const PointSet& set) {
        std::map<std::size_t, unsigned> mult;
        for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) mult[i] = 1;
        return ProjectiveSystem(std::move(space), std::move(mult));
    }

    const ProjectiveSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    const std::map<std::size_t, unsigned>& multiplicities() const { return mult_; }
    unsigned multiplicity(std::size_t p) const {
        auto it = mult_.find(p);
        return it == mult_.end() ? 0 : it->second;
    }
    std::size_t n() const { return n_; }
    std::size_t k() const { return space_->vec_len(); }

    PointSet support() const {
        PointSet s(space_->size());
        for (const auto& [p, m] : mult_) s.set(p);
        return s;
    }

    bool all_simple() const {
        return std::all_of(mult_.begin(), mult_.end(), [](const auto& e) { return e.second == 1; });
    }

   private:
    SpacePtr space_;
    std::map<std::size_t, unsigned> mult_;
    std::size_t n_ = 0;
};

/// Total multiplicity of the system's points lying in the point set.
inline std::size_t char_function(const ProjectiveSystem& s, const PointSet& points) {
    if (points.size() != s.space().size()) throw std::invalid_argument("char_function: point set from a different space");
    std::size_t total = 0;
    for (const auto& [p, m] : s.multiplicities())
        if (points.test(p)) total += m;
    return total;
}

inline std::size_t char_function(const ProjectiveSystem& s, const Flat& flat) {
    if (flat.vec_len() != s.space().vec_len()) throw std::invalid_argument("char_function: flat from a different space");
    return char_function(s, s.space().points_of(flat));
}

/// Char of every hyperplane, indexed like the space's dual table.
inline std::vector<std::size_t> hyperplane_chars(const ProjectiveSystem& s) {
    std::vector<std::size_t> out(s.space().num_hyperplanes(), 0);
    for (const auto& [p, m] : s.multiplicities())
        for (auto h : s.space().hyperplanes_through(p)) out[h] += m;
    return out;
}

/// n - max_H Char(H).
inline std::size_t geometric_min_distance(const ProjectiveSystem& s) {
    const auto chars = hyperplane_chars(s);
    return s.n() - *std::max_element(chars.begin(), chars.end());
}

/// Weight distribution read off the hyperplane intersections: each hyperplane
/// accounts for q-1 codewords of weight n - Char(H).
inline WeightDistribution geometric_weight_distribution(const ProjectiveSystem& s) {
    const unsigned q = s.space().field().q();
    WeightDistribution wd{q, s.n(), s.k(), std::vector<std::uint64_t>(s.n() + 1, 0)};
    wd.A[0] = 1;
    for (auto c : hyperplane_chars(s)) wd.A[s.n() - c] += q - 1;
    return wd;
}

/// Columns of the generator matrix as a multiset of points.
inline ProjectiveSystem phi(const LinearCode& c) {
    if (c.k() < 2) throw std::invalid_argument("phi: need k >= 2");
    if (!is_nondegenerate(c)) throw std::invalid_argument("phi: degenerate code (zero column)");
    auto space = projective_space(static_cast<int>(c.k()) - 1, c.field().q());
    std::map<std::size_t, unsigned> mult;
    for (std::size_t j = 0; j < c.n(); ++j) ++mult[space->index_of(c.generator().column(j))];
    return ProjectiveSystem(space, std::move(mult));
}

/// Generator matrix with the points as columns, canonical order, repeated by multiplicity.
inline LinearCode psi(const ProjectiveSystem& s) {
    std::vector<Vec> cols;
    for (const auto& [p, m] : s.multiplicities())
        for (unsigned i = 0; i < m; ++i) cols.push_back(s.space().coords(p));
    return LinearCode(s.space().field_ptr(), Matrix::from_columns(cols));
}

namespace detail {

inline void check_r(const ProjectiveSpace& space, int r) {
    if (r < 1 || r > space.dim())
        throw std::invalid_argument("blocking: r must satisfy 1 <= r <= N (r=" + std::to_string(r) + ", N=" + std::to_string(space.dim()) + ")");
}

/// Calls fn(points of flat, rank of flat) for every (N-r)-flat; stops when fn returns false.
inline void for_each_codim_flat(const ProjectiveSpace& space, int r, const std::function<bool(const PointSet&, std::size_t)>& fn) {
    const int d = space.dim() - r;
    if (r == 1) {
        for (std::size_t h = 0; h < space.num_hyperplanes(); ++h)
            if (!fn(space.hyperplane_points(h), space.vec_len() - 1)) return;
        return;
    }
    bool go = true;
    for_each_flat(space, d, [&](const Flat& f) {
        if (go) go = fn(space.points_of(f), static_cast<std::size_t>(d) + 1);
    });
}

}  // namespace detail

/// Largest t such that every (N-r)-flat meets the set in >= t points.
inline std::size_t blocking_multiplicity(const ProjectiveSpace& space, const PointSet& set, int r) {
    detail::check_r(space, r);
    std::size_t best = set.count();
    detail::for_each_codim_flat(space, r, [&](const PointSet& flat, std::size_t) {
        best = std::min(best, (flat & set).count());
        return true;
    });
    return best;
}

inline bool is_tfold_rblocking(const ProjectiveSpace& space, const PointSet& set, std::size_t t, int r) {
    if (t < 1) throw std::invalid_argument("blocking: t must be positive");
    return blocking_multiplicity(space, set, r) >= t;
}

/// Every (N-r)-flat is spanned by its intersection with the set.
inline bool is_cutting(const ProjectiveSpace& space, const PointSet& set, int r = 1) {
    detail::check_r(space, r);
    if (set.size() != space.size()) throw std::invalid_argument("is_cutting: point set from a different space");
    bool ok = true;
    detail::for_each_codim_flat(space, r, [&](const PointSet& flat, std::size_t flat_rank) {
        const PointSet meet = flat & set;
        ok = meet.count() >= flat_rank && space.rank_of(meet) == flat_rank;
        return ok;
    });
    return ok;
}

/// Cutting, and no single point can be dropped. Throws if the set is not cutting.
inline bool is_minimal_cutting(const ProjectiveSpace& space, const PointSet& set, int r = 1) {
    if (!is_cutting(space, set, r)) throw std::invalid_argument("is_minimal_cutting: set is not cutting");
    PointSet rest = set;
    for (auto p = set.find_first(); p != PointSet::npos; p = set.find_next(p)) {
        rest.reset(p);
        const bool still = is_cutting(space, rest, r);
        rest.set(p);
        if (still) return false;
    }
    return true;
}

}  // namespace cutcode
