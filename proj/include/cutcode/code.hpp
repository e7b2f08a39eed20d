// Linear [n,k]_q codes given by a generator matrix.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcode/errors.hpp"
#include "cutcode/gf.hpp"
#include "cutcode/linalg.hpp"

namespace cutcode {

/// Largest message space (q^k) any enumeration will walk.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 26;

struct WeightDistribution {
    unsigned q = 0;
    std::size_t n = 0, k = 0;
    std::vector<std::uint64_t> A;  // A[i] = number of codewords of weight i, 0 <= i <= n

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto a : A) s += a;
        return s;
    }
    /// Smallest nonzero weight, 0 if the code is {0}.
    std::size_t min_weight() const {
        for (std::size_t i = 1; i < A.size(); ++i)
            if (A[i]) return i;
        return 0;
    }
    std::size_t max_weight() const {
        for (std::size_t i = A.size(); i-- > 1;)
            if (A[i]) return i;
        return 0;
    }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

inline std::size_t weight(const Vec& c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Elem x) { return x != 0; }));
}

/// 0-based indices of the nonzero coordinates.
inline std::vector<std::size_t> support(const Vec& c) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s.push_back(i);
    return s;
}

class LinearCode {
   public:
    LinearCode(gf::FieldPtr field, Matrix generator) : field_(std::move(field)), g_(std::move(generator)) {
        if (!field_) throw std::invalid_argument("code: null field");
        if (g_.rows() < 1 || g_.cols() < g_.rows())
            throw std::invalid_argument("code: need 1 <= k <= n, got k=" + std::to_string(g_.rows()) + " n=" + std::to_string(g_.cols()));
        for (std::size_t r = 0; r < g_.rows(); ++r)
            for (std::size_t c = 0; c < g_.cols(); ++c)
                if (!field_->contains(g_(r, c))) throw std::invalid_argument("code: matrix entry outside GF(" + std::to_string(field_->q()) + ")");
        if (rank(*field_, g_) != g_.rows()) throw std::invalid_argument("code: generator rows are linearly dependent");
    }

    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }
    const gf::Field& field() const { return *field_; }
    const gf::FieldPtr& field_ptr() const { return field_; }
    const Matrix& generator() const { return g_; }

    /// q^k, or throws GuardExceeded.
    std::uint64_t message_count() const {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k(); ++i) {
            total *= field_->q();
            if (total > kEnumerationGuard)
                throw GuardExceeded("code: q^k exceeds enumeration guard 2^26");
        }
        return total;
    }

    Vec encode(const Vec& message) const {
        if (message.size() != k()) throw std::invalid_argument("code: message of wrong length");
        Vec c(n(), 0);
        for (std::size_t r = 0; r < k(); ++r) {
            if (message[r] == 0) continue;
            for (std::size_t j = 0; j < n(); ++j) c[j] = field_->add(c[j], field_->mul(message[r], g_(r, j)));
        }
        return c;
    }

    bool contains(const Vec& c) const {
        if (c.size() != n()) return false;
        SpanBuilder sb(*field_, n());
        for (std::size_t r = 0; r < k(); ++r) sb.insert(g_.row(r));
        return sb.contains(c);
    }

    const WeightDistribution& weight_distribution() const {
        std::call_once(cache_->once, [this] { cache_->wd = compute_weight_distribution(); });
        return *cache_->wd;
    }

    std::size_t min_distance() const { return weight_distribution().min_weight(); }

    /// Visits every codeword once. Messages follow a p-ary Gray order, so each
    /// step adds one precomputed row multiple.
    template <class Fn>
    void for_each_codeword(Fn&& fn) const {
        const std::uint64_t total = message_count();
        const unsigned p = field_->p(), m = field_->m();
        std::vector<Vec> delta;
        for (std::size_t r = 0; r < k(); ++r) {
            unsigned digit = 1;
            for (unsigned t = 0; t < m; ++t, digit *= p) {
                Vec row(n());
                for (std::size_t j = 0; j < n(); ++j) row[j] = field_->mul(static_cast<Elem>(digit), g_(r, j));
                delta.push_back(std::move(row));
            }
        }
        Vec cw(n(), 0);
        fn(static_cast<const Vec&>(cw));
        for (std::uint64_t s = 1; s < total; ++s) {
            std::uint64_t x = s;
            std::size_t pos = 0;
            while (x % p == 0) {
                x /= p;
                ++pos;
            }
            const Vec& d = delta[pos];
            for (std::size_t j = 0; j < n(); ++j) cw[j] = field_->add(cw[j], d[j]);
            fn(static_cast<const Vec&>(cw));
        }
    }

   private:
    WeightDistribution compute_weight_distribution() const {
        WeightDistribution wd{field_->q(), n(), k(), std::vector<std::uint64_t>(n() + 1, 0)};
        const std::uint64_t total = message_count();
        if (field_->q() == 2 && n() <= 64) {
            std::vector<std::uint64_t> rows(k(), 0);
            for (std::size_t r = 0; r < k(); ++r)
                for (std::size_t j = 0; j < n(); ++j)
                    if (g_(r, j)) rows[r] |= std::uint64_t{1} << j;
            std::uint64_t cw = 0;
            ++wd.A[0];
            for (std::uint64_t s = 1; s < total; ++s) {
                cw ^= rows[static_cast<std::size_t>(std::countr_zero(s))];
                ++wd.A[static_cast<std::size_t>(std::popcount(cw))];
            }
            return wd;
        }
        for_each_codeword([&](const Vec& c) { ++wd.A[weight(c)]; });
        return wd;
    }

    struct Cache {
        std::once_flag once;
        std::optional<WeightDistribution> wd;
    };

    gf::FieldPtr field_;
    Matrix g_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline WeightDistribution weight_distribution(const LinearCode& c) { return c.weight_distribution(); }
inline std::size_t min_distance(const LinearCode& c) { return c.min_distance(); }

inline bool is_nondegenerate(const LinearCode& c) {
    for (std::size_t j = 0; j < c.n(); ++j) {
        bool nonzero = false;
        for (std::size_t r = 0; r < c.k() && !nonzero; ++r) nonzero = c.generator()(r, j) != 0;
        if (!nonzero) return false;
    }
    return true;
}

/// Deletes the given 0-based coordinates. Throws RankDrop if the result has
/// dimension below k.
inline LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& positions) {
    for (auto p : positions)
        if (p >= c.n()) throw std::out_of_range("puncture: coordinate " + std::to_string(p) + " out of range");
    if (positions.size() >= c.n()) throw std::invalid_argument("puncture: cannot delete every coordinate");
    Matrix g(c.k(), c.n() - positions.size());
    std::size_t col = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
        if (positions.count(j)) continue;
        for (std::size_t r = 0; r < c.k(); ++r) g(r, col) = c.generator()(r, j);
        ++col;
    }
    if (rank(c.field(), g) < c.k()) {
        // u with u G' = 0: a kernel vector of G'^T.
        Matrix gt(g.cols(), g.rows());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t j = 0; j < g.cols(); ++j) gt(j, r) = g(r, j);
        Vec u = kernel(c.field(), gt).front();
        Vec cw = c.encode(u);
        throw RankDrop("puncture: dimension drops; a nonzero codeword is supported inside the deleted coordinates", std::move(u), std::move(cw));
    }
    return LinearCode(c.field_ptr(), std::move(g));
}

}  // namespace cutcode
