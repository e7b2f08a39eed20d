// The projective space PG(N,q): canonically indexed points, the dual
// hyperplane table, flats, spans and incidence.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cutcode/gf.hpp"
#include "cutcode/linalg.hpp"

namespace cutcode {

using PointSet = boost::dynamic_bitset<std::uint64_t>;

/// Number of points of PG(k,q); 0 for k = -1.
inline std::uint64_t theta(unsigned q, int k) {
    if (gf::detail::prime_power(q).first == 0 || q > gf::kMaxOrder)
        throw std::invalid_argument("theta: unsupported q=" + std::to_string(q));
    if (k < -1) throw std::invalid_argument("theta: k must be >= -1");
    std::uint64_t s = 0, pw = 1;
    for (int i = 0; i <= k; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

/// Scalar multiple of v whose first nonzero coordinate is 1.
inline Vec normalize(const gf::Field& f, Vec v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (lead == v.end()) throw std::invalid_argument("normalize: zero vector");
    const Elem s = f.inv(*lead);
    for (auto& x : v) x = f.mul(x, s);
    return v;
}

struct Point {
    Vec coords;
    std::size_t index = 0;
    friend bool operator==(const Point& a, const Point& b) { return a.index == b.index && a.coords == b.coords; }
};

/// A projective subspace kept as a reduced row echelon basis.
class Flat {
   public:
    Flat(gf::FieldPtr field, std::size_t vec_len, const std::vector<Vec>& generators)
        : field_(std::move(field)), len_(vec_len) {
        if (generators.empty()) return;
        for (const auto& g : generators)
            if (g.size() != len_) throw std::invalid_argument("flat: generator of wrong length");
        const Echelon e = rref(*field_, Matrix::from_rows(generators));
        for (std::size_t r = 0; r < e.rank(); ++r) basis_.push_back(e.reduced.row(r));
    }

    /// Projective dimension; -1 for the empty flat.
    int dim() const { return static_cast<int>(basis_.size()) - 1; }
    std::size_t vec_len() const { return len_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const gf::FieldPtr& field() const { return field_; }

    bool contains(const Vec& v) const {
        SpanBuilder sb(*field_, len_);
        for (const auto& b : basis_) sb.insert(b);
        return sb.contains(v);
    }

    /// Vectors orthogonal to the flat: a point lies on it iff it is orthogonal to all of them.
    std::vector<Vec> dual_basis() const {
        if (basis_.empty()) {
            std::vector<Vec> all;
            for (std::size_t i = 0; i < len_; ++i) {
                Vec e(len_, 0);
                e[i] = 1;
                all.push_back(std::move(e));
            }
            return all;
        }
        return kernel(*field_, Matrix::from_rows(basis_));
    }

    friend bool operator==(const Flat& a, const Flat& b) { return a.len_ == b.len_ && a.basis_ == b.basis_; }

   private:
    gf::FieldPtr field_;
    std::size_t len_;
    std::vector<Vec> basis_;
};

class ProjectiveSpace;
using SpacePtr = std::shared_ptr<const ProjectiveSpace>;

class ProjectiveSpace {
   public:
    static constexpr std::uint64_t kMaxVectors = std::uint64_t{1} << 21;

    ProjectiveSpace(int N, gf::FieldPtr field) : N_(N), field_(std::move(field)) {
        if (N < 1) throw std::invalid_argument("pg: dimension must be >= 1");
        const unsigned q = field_->q();
        std::uint64_t total = 1;
        for (int i = 0; i <= N; ++i) {
            total *= q;
            if (total > kMaxVectors) throw std::invalid_argument("pg: PG(" + std::to_string(N) + "," + std::to_string(q) + ") too large");
        }
        lookup_.assign(total, kNone);
        const std::size_t len = vec_len();
        Vec v(len);
        for (std::uint64_t key = 1; key < total; ++key) {
            std::uint64_t k = key;
            for (std::size_t i = len; i-- > 0;) {
                v[i] = static_cast<Elem>(k % q);
                k /= q;
            }
            const auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
            if (*lead != 1) continue;
            lookup_[key] = points_.size();
            points_.push_back(v);
        }
    }

    int dim() const { return N_; }
    std::size_t vec_len() const { return static_cast<std::size_t>(N_) + 1; }
    const gf::Field& field() const { return *field_; }
    const gf::FieldPtr& field_ptr() const { return field_; }
    std::size_t size() const { return points_.size(); }
    std::size_t num_hyperplanes() const { return points_.size(); }

    const Vec& coords(std::size_t i) const { return points_.at(i); }
    Point point(std::size_t i) const { return {points_.at(i), i}; }

    Point normalize(const Vec& v) const {
        if (v.size() != vec_len()) throw std::invalid_argument("pg: coordinate vector of wrong length");
        Vec n = cutcode::normalize(*field_, v);
        return {n, lookup_[key_of(n)]};
    }
    std::size_t index_of(const Vec& v) const { return normalize(v).index; }

    /// Hyperplane h is {x : <coords(h), x> = 0}; the dual table shares the point order.
    const Vec& hyperplane_normal(std::size_t h) const { return points_.at(h); }

    bool incident(std::size_t point, std::size_t hyperplane) const {
        return dot(*field_, points_[point], points_[hyperplane]) == 0;
    }

    const PointSet& hyperplane_points(std::size_t h) const {
        ensure_incidence();
        return hyp_points_[h];
    }
    const std::vector<std::size_t>& hyperplanes_through(std::size_t point) const {
        ensure_incidence();
        return point_hyps_[point];
    }

    Flat hyperplane_flat(std::size_t h) const {
        return Flat(field_, vec_len(), kernel(*field_, Matrix::from_rows({points_.at(h)})));
    }

    Flat whole() const {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < vec_len(); ++i) {
            Vec e(vec_len(), 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return Flat(field_, vec_len(), basis);
    }

    PointSet empty_set() const { return PointSet(size()); }

    PointSet points_of(const Flat& flat) const {
        PointSet out(size());
        if (flat.dim() < 0) return out;
        const auto dual = flat.dual_basis();
        for (std::size_t i = 0; i < size(); ++i) {
            bool in = true;
            for (const auto& d : dual)
                if (dot(*field_, d, points_[i]) != 0) {
                    in = false;
                    break;
                }
            if (in) out.set(i);
        }
        return out;
    }

    /// Rank (vector dimension) of the span of a point set.
    std::size_t rank_of(const PointSet& s) const {
        SpanBuilder sb(*field_, vec_len());
        for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
            sb.insert(points_[i]);
            if (sb.rank() == vec_len()) break;
        }
        return sb.rank();
    }

   private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::uint64_t key_of(const Vec& v) const {
        std::uint64_t k = 0;
        for (auto x : v) k = k * field_->q() + x;
        return k;
    }

    void ensure_incidence() const {
        std::call_once(incidence_once_, [this] {
            hyp_points_.assign(size(), PointSet(size()));
            point_hyps_.assign(size(), {});
            for (std::size_t h = 0; h < size(); ++h)
                for (std::size_t p = 0; p < size(); ++p)
                    if (incident(p, h)) {
                        hyp_points_[h].set(p);
                        point_hyps_[p].push_back(h);
                    }
        });
    }

    int N_;
    gf::FieldPtr field_;
    std::vector<Vec> points_;
    std::vector<std::size_t> lookup_;
    mutable std::once_flag incidence_once_;
    mutable std::vector<PointSet> hyp_points_;
    mutable std::vector<std::vector<std::size_t>> point_hyps_;
};

/// Shared PG(N,q), built once per (N, q).
inline SpacePtr projective_space(int N, unsigned q) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, SpacePtr> registry;
    auto field = gf::field_create(q);
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(N, q);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
    auto space = std::make_shared<const ProjectiveSpace>(N, field);
    registry.emplace(key, space);
    return space;
}

inline Flat span(const ProjectiveSpace& space, const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("span: empty point list");
    std::vector<Vec> gens;
    for (const auto& p : pts) {
        if (p.coords.size() != space.vec_len()) throw std::invalid_argument("span: point from a different space");
        gens.push_back(p.coords);
    }
    return Flat(space.field_ptr(), space.vec_len(), gens);
}

inline Flat span(const ProjectiveSpace& space, const PointSet& pts) {
    std::vector<Vec> gens;
    for (auto i = pts.find_first(); i != PointSet::npos; i = pts.find_next(i)) gens.push_back(space.coords(i));
    return Flat(space.field_ptr(), space.vec_len(), gens);
}

/// Incidence of a point with a hyperplane given as a flat.
inline bool incident(const ProjectiveSpace& space, const Point& p, const Flat& hyperplane) {
    if (hyperplane.vec_len() != space.vec_len() || p.coords.size() != space.vec_len())
        throw std::invalid_argument("incident: objects from different spaces");
    if (hyperplane.dim() != space.dim() - 1) throw std::invalid_argument("incident: flat is not a hyperplane");
    const Vec normal = hyperplane.dual_basis().front();
    return dot(space.field(), normal, p.coords) == 0;
}

/// The q+1 points of the line PQ in index order.
inline std::vector<Point> line_through(const ProjectiveSpace& space, const Point& p, const Point& q) {
    if (space.index_of(p.coords) == space.index_of(q.coords)) throw std::invalid_argument("line_through: P = Q");
    const auto& f = space.field();
    std::vector<Point> out{space.normalize(p.coords)};
    for (unsigned a = 0; a < f.q(); ++a) {
        Vec v(space.vec_len());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(f.mul(static_cast<Elem>(a), p.coords[i]), q.coords[i]);
        out.push_back(space.normalize(v));
    }
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.index < b.index; });
    return out;
}

/// Indices of all hyperplanes containing the flat.
inline std::vector<std::size_t> hyperplane_indices_through(const ProjectiveSpace& space, const Flat& flat) {
    if (flat.vec_len() != space.vec_len()) throw std::invalid_argument("hyperplanes_through: flat from a different space");
    if (flat.dim() >= space.dim()) throw std::invalid_argument("hyperplanes_through: flat is the whole space");
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < space.num_hyperplanes(); ++h) {
        bool all = true;
        for (const auto& b : flat.basis())
            if (dot(space.field(), b, space.hyperplane_normal(h)) != 0) {
                all = false;
                break;
            }
        if (all) out.push_back(h);
    }
    return out;
}

inline std::vector<Flat> hyperplanes_through(const ProjectiveSpace& space, const Flat& flat) {
    std::vector<Flat> out;
    for (auto h : hyperplane_indices_through(space, flat)) out.push_back(space.hyperplane_flat(h));
    return out;
}

/// Calls fn on every d-flat exactly once, ordered by pivot columns then by
/// the free entries of the reduced echelon basis.
inline void for_each_flat(const ProjectiveSpace& space, int d, const std::function<void(const Flat&)>& fn) {
    if (d < 0 || d >= space.dim()) throw std::invalid_argument("enumerate_flats: d out of range");
    const std::size_t len = space.vec_len();
    const std::size_t rows = static_cast<std::size_t>(d) + 1;
    const unsigned q = space.field().q();

    std::vector<std::size_t> piv(rows);
    for (std::size_t i = 0; i < rows; ++i) piv[i] = i;
    while (true) {
        // Free slots: (row, col) with col > piv[row] and col not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = piv[r] + 1; c < len; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
        std::vector<unsigned> digit(slots.size(), 0);
        while (true) {
            std::vector<Vec> basis(rows, Vec(len, 0));
            for (std::size_t r = 0; r < rows; ++r) basis[r][piv[r]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                basis[slots[s].first][slots[s].second] = static_cast<Elem>(digit[s]);
            fn(Flat(space.field_ptr(), len, basis));
            bool carry = true;
            for (std::size_t s = slots.size(); s-- > 0;) {
                if (++digit[s] < q) {
                    carry = false;
                    break;
                }
                digit[s] = 0;
            }
            if (carry) break;
        }
        // Next pivot combination.
        std::size_t i = rows;
        while (i > 0 && piv[i - 1] == len - rows + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < rows; ++j) piv[j] = piv[j - 1] + 1;
    }
}

inline std::vector<Flat> enumerate_flats(const ProjectiveSpace& space, int d) {
    std::vector<Flat> out;
    for_each_flat(space, d, [&](const Flat& f) { out.push_back(f); });
    return out;
}

}  // namespace cutcode
