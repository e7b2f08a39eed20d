// Exhaustive search for cutting blocking sets in small projective spaces,
// projective/monomial equivalence of codes, and classification of point sets
// up to collineation.
//
// The search engine works on spaces with at most 64 points: a point set is a
// 64-bit mask, and every hyperplane carries the mask of the subspace spanned
// by the chosen points on it together with that subspace's rank.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cutcode/bounds.hpp"
#include "cutcode/correspond.hpp"

namespace cutcode {

enum class SearchMode { first, all, count };
enum class Reduction { none, point, basis };

inline const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::first: return "first";
        case SearchMode::all: return "all";
        case SearchMode::count: return "count";
    }
    return "?";
}

inline const char* to_string(Reduction r) {
    switch (r) {
        case Reduction::none: return "none";
        case Reduction::point: return "point";
        case Reduction::basis: return "basis";
    }
    return "?";
}

struct SearchOptions {
    SearchMode mode = SearchMode::first;
    std::uint64_t budget = 0;  // node limit, 0 = unlimited
    unsigned threads = 1;
    /// point: only sets containing point 0; basis: only sets containing the
    /// standard basis points. Both keep one representative of every
    /// collineation class.
    Reduction reduction = Reduction::point;
};

struct SearchReport {
    unsigned q = 0, k = 0;
    std::size_t n = 0;
    SearchMode mode = SearchMode::first;
    Reduction reduction = Reduction::point;
    std::vector<std::vector<std::size_t>> found;  // point indices, ascending; sets sorted
    std::uint64_t count = 0;                      // sets found (or counted)
    bool exhaustive = false;                      // the budget was never hit
    std::uint64_t nodes = 0;
    double wall_time = 0;
};

namespace detail {

inline std::uint64_t binom64(unsigned n, unsigned r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (unsigned i = 1; i <= r; ++i) out = static_cast<std::uint64_t>(static_cast<unsigned __int128>(out) * (n - r + i) / i);
    return out;
}

class CuttingEngine {
   public:
    struct State {
        std::array<std::uint64_t, 64> span{};
        std::array<std::uint8_t, 64> rank{};
        std::uint64_t chosen = 0, cand = 0;
        unsigned size = 0;
    };

    explicit CuttingEngine(const ProjectiveSpace& s) : theta_(static_cast<unsigned>(s.size())), N_(static_cast<unsigned>(s.dim())) {
        if (s.size() > 64) throw std::invalid_argument("search: PG(" + std::to_string(s.dim()) + "," + std::to_string(s.field().q()) + ") has more than 64 points");
        hyp_.resize(theta_);
        hyps_of_.resize(theta_);
        for (unsigned h = 0; h < theta_; ++h) {
            const auto& pts = s.hyperplane_points(h);
            for (auto p = pts.find_first(); p != PointSet::npos; p = pts.find_next(p)) {
                hyp_[h] |= bit(static_cast<unsigned>(p));
                hyps_of_[p].push_back(static_cast<std::uint8_t>(h));
            }
        }
        lines_.assign(std::size_t{theta_} * theta_, 0);
        for (unsigned a = 0; a < theta_; ++a)
            for (unsigned b = a + 1; b < theta_; ++b) {
                std::uint64_t m = 0;
                for (const auto& p : line_through(s, s.point(a), s.point(b))) m |= bit(static_cast<unsigned>(p.index));
                lines_[a * theta_ + b] = lines_[b * theta_ + a] = m;
            }
    }

    unsigned points() const { return theta_; }
    static std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

    State root() const {
        State st;
        st.cand = theta_ == 64 ? ~std::uint64_t{0} : bit(theta_) - 1;
        return st;
    }

    void add(State& st, unsigned p) const {
        const std::uint64_t pb = bit(p);
        st.chosen |= pb;
        st.cand &= ~pb;
        ++st.size;
        for (auto h : hyps_of_[p]) {
            std::uint64_t& sp = st.span[h];
            if (sp & pb) continue;
            std::uint64_t joined = sp | pb;
            for (std::uint64_t rest = sp; rest; rest &= rest - 1)
                joined |= lines_[p * theta_ + static_cast<unsigned>(std::countr_zero(rest))];
            sp = joined;
            ++st.rank[h];
        }
    }

    enum class Verdict { dead, cutting, branch };

    /// Classifies a node; on `branch`, `useful` holds the points of the most
    /// constrained hyperplane that could raise its rank.
    Verdict analyze(const State& st, unsigned n, std::uint64_t& useful) const {
        const unsigned slots = n - st.size;
        unsigned total_need = 0;
        int best_slack = std::numeric_limits<int>::max();
        std::array<std::uint8_t, 64> pot{};
        for (unsigned h = 0; h < theta_; ++h) {
            const unsigned need = N_ - st.rank[h];
            if (need == 0) continue;
            const std::uint64_t u = st.cand & hyp_[h] & ~st.span[h];
            const unsigned cnt = static_cast<unsigned>(std::popcount(u));
            if (need > slots || need > cnt) return Verdict::dead;
            total_need += need;
            for (std::uint64_t r = u; r; r &= r - 1) ++pot[std::countr_zero(r)];
            const int slack = static_cast<int>(cnt) - static_cast<int>(need);
            if (slack < best_slack) {
                best_slack = slack;
                useful = u;
            }
        }
        if (total_need == 0) return Verdict::cutting;
        // Each added point raises the rank of at most pot[p] hyperplanes by one.
        std::array<std::uint8_t, 64> vals;
        unsigned nv = 0;
        for (std::uint64_t r = st.cand; r; r &= r - 1) vals[nv++] = pot[std::countr_zero(r)];
        const unsigned take = std::min(slots, nv);
        std::partial_sort(vals.begin(), vals.begin() + take, vals.begin() + nv, std::greater<>());
        unsigned cap = 0;
        for (unsigned i = 0; i < take; ++i) cap += vals[i];
        return cap < total_need ? Verdict::dead : Verdict::branch;
    }

   private:
    unsigned theta_, N_;
    std::vector<std::uint64_t> hyp_;
    std::vector<std::vector<std::uint8_t>> hyps_of_;
    std::vector<std::uint64_t> lines_;
};

struct BranchResult {
    std::uint64_t nodes = 0, count = 0;
    std::vector<std::uint64_t> found;
    bool hit = false;
};

class SearchRun {
   public:
    SearchRun(const CuttingEngine& e, unsigned n, const SearchOptions& o, std::atomic<std::uint64_t>& nodes, std::atomic<bool>& out_of_budget,
              std::atomic<std::size_t>& best_branch)
        : e_(e), n_(n), opt_(o), nodes_(nodes), out_of_budget_(out_of_budget), best_branch_(best_branch) {}

    /// Explores one subtree; returns false if it stopped early.
    bool dfs(const CuttingEngine::State& st, BranchResult& r, std::size_t branch) {
        if (!tick(r)) return false;
        if (opt_.mode == SearchMode::first && branch > best_branch_.load(std::memory_order_relaxed)) return false;
        std::uint64_t useful = 0;
        switch (e_.analyze(st, n_, useful)) {
            case CuttingEngine::Verdict::dead: return true;
            case CuttingEngine::Verdict::cutting: return complete(st, r);
            case CuttingEngine::Verdict::branch: break;
        }
        std::uint64_t excluded = 0;
        for (std::uint64_t rest = useful; rest; rest &= rest - 1) {
            const unsigned p = static_cast<unsigned>(std::countr_zero(rest));
            CuttingEngine::State child = st;
            child.cand &= ~excluded;
            e_.add(child, p);
            excluded |= CuttingEngine::bit(p);
            if (!dfs(child, r, branch)) return false;
            if (r.hit && opt_.mode == SearchMode::first) return false;
        }
        return true;
    }

    /// Every way of filling the remaining slots from the candidates.
    bool complete(const CuttingEngine::State& st, BranchResult& r) {
        const unsigned slots = n_ - st.size;
        const unsigned avail = static_cast<unsigned>(std::popcount(st.cand));
        if (slots > avail) return true;
        switch (opt_.mode) {
            case SearchMode::count: r.count += binom64(avail, slots); return true;
            case SearchMode::first: {
                std::uint64_t set = st.chosen, rest = st.cand;
                for (unsigned i = 0; i < slots; ++i, rest &= rest - 1) set |= rest & -rest;
                r.found.push_back(set);
                r.count = 1;
                r.hit = true;
                return false;
            }
            case SearchMode::all: {
                std::vector<unsigned> pool;
                for (std::uint64_t rest = st.cand; rest; rest &= rest - 1) pool.push_back(static_cast<unsigned>(std::countr_zero(rest)));
                std::vector<unsigned> idx(slots);
                for (unsigned i = 0; i < slots; ++i) idx[i] = i;
                while (true) {
                    std::uint64_t set = st.chosen;
                    for (auto i : idx) set |= CuttingEngine::bit(pool[i]);
                    r.found.push_back(set);
                    ++r.count;
                    unsigned i = slots;
                    while (i > 0 && idx[i - 1] == avail - slots + i - 1) --i;
                    if (i == 0) break;
                    ++idx[i - 1];
                    for (unsigned j = i; j < slots; ++j) idx[j] = idx[j - 1] + 1;
                    if (!tick(r)) return false;
                }
                return true;
            }
        }
        return true;
    }

   private:
    bool tick(BranchResult& r) {
        if (opt_.budget != 0) {
            if (out_of_budget_.load(std::memory_order_relaxed)) return false;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > opt_.budget) {
                out_of_budget_ = true;
                return false;
            }
        }
        ++r.nodes;
        return true;
    }

    const CuttingEngine& e_;
    unsigned n_;
    const SearchOptions& opt_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& out_of_budget_;
    std::atomic<std::size_t>& best_branch_;
};

inline std::vector<std::size_t> mask_points(std::uint64_t m) {
    std::vector<std::size_t> out;
    for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

}  // namespace detail

/// All (or the first, or the number of) n-subsets of PG(k-1,q) that are cutting
/// blocking sets, restricted by the symmetry reduction in `opt`.
inline SearchReport find_cutting_sets(unsigned q, unsigned k, std::size_t n, const SearchOptions& opt = {}) {
    if (k < 2) throw std::invalid_argument("search: need k >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    auto space = projective_space(static_cast<int>(k) - 1, q);
    const detail::CuttingEngine engine(*space);
    SearchReport rep;
    rep.q = q;
    rep.k = k;
    rep.n = n;
    rep.mode = opt.mode;
    rep.reduction = opt.reduction;
    if (n < 1) throw std::invalid_argument("search: n must be positive");

    auto root = engine.root();
    std::vector<unsigned> fixed;
    if (opt.reduction == Reduction::point) fixed.push_back(0);
    if (opt.reduction == Reduction::basis)
        for (std::size_t i = 0; i < k; ++i) {
            Vec e(k, 0);
            e[i] = 1;
            fixed.push_back(static_cast<unsigned>(space->index_of(e)));
        }
    std::sort(fixed.begin(), fixed.end());
    if (n > engine.points() || fixed.size() > n) {
        rep.exhaustive = true;
        return rep;
    }
    for (auto p : fixed) engine.add(root, p);

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};

    // Top-level branches, explored independently and merged in order.
    std::vector<detail::CuttingEngine::State> branches;
    detail::BranchResult top;
    {
        detail::SearchRun run(engine, static_cast<unsigned>(n), opt, nodes, out_of_budget, best_branch);
        std::uint64_t useful = 0;
        const auto verdict = engine.analyze(root, static_cast<unsigned>(n), useful);
        ++top.nodes;
        if (opt.budget) nodes = 1;
        if (verdict == detail::CuttingEngine::Verdict::cutting) {
            run.complete(root, top);
        } else if (verdict == detail::CuttingEngine::Verdict::branch) {
            std::uint64_t excluded = 0;
            for (std::uint64_t rest = useful; rest; rest &= rest - 1) {
                const unsigned p = static_cast<unsigned>(std::countr_zero(rest));
                auto child = root;
                child.cand &= ~excluded;
                engine.add(child, p);
                excluded |= detail::CuttingEngine::bit(p);
                branches.push_back(child);
            }
        }
    }

    std::vector<detail::BranchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        detail::SearchRun run(engine, static_cast<unsigned>(n), opt, nodes, out_of_budget, best_branch);
        while (true) {
            const std::size_t b = next.fetch_add(1);
            if (b >= branches.size()) return;
            run.dfs(branches[b], results[b], b);
            if (results[b].hit) {
                std::size_t cur = best_branch.load();
                while (b < cur && !best_branch.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1 || branches.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, branches.size()); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    rep.nodes = top.nodes;
    rep.count = top.count;
    std::vector<std::uint64_t> masks = top.found;
    if (opt.mode == SearchMode::first && top.hit) {
        results.clear();
    }
    for (std::size_t b = 0; b < results.size(); ++b) {
        rep.nodes += results[b].nodes;
        rep.count += results[b].count;
        masks.insert(masks.end(), results[b].found.begin(), results[b].found.end());
        if (opt.mode == SearchMode::first && results[b].hit) break;
    }
    rep.exhaustive = !out_of_budget.load();
    for (auto m : masks) rep.found.push_back(detail::mask_points(m));
    std::sort(rep.found.begin(), rep.found.end());
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct ShortestLength {
    std::size_t n = 0;
    std::vector<SearchReport> reports;  // one per length tried
};

/// Smallest n <= n_max admitting a cutting set, scanning upward from the best
/// proven lower bound. Throws GuardExceeded if a length could not be settled.
inline ShortestLength shortest_minimal_length(unsigned q, unsigned k, std::size_t n_max, SearchOptions opt = {}) {
    opt.mode = SearchMode::first;
    ShortestLength out;
    for (std::size_t n = lb_length_best(q, k); n <= n_max; ++n) {
        auto r = find_cutting_sets(q, k, n, opt);
        const bool found = !r.found.empty();
        const bool settled = found || r.exhaustive;
        out.reports.push_back(std::move(r));
        if (!settled) throw GuardExceeded("shortest_minimal_length: budget exhausted at n=" + std::to_string(n));
        if (found) {
            out.n = n;
            return out;
        }
    }
    throw std::runtime_error("shortest_minimal_length: no cutting set of size <= " + std::to_string(n_max));
}

// ---------------------------------------------------------------------------
// Equivalence

/// Column j of A, multiplied by scale[j], becomes column perm[j] of a generator
/// matrix G' with collineation * G' = G_B; G' generates the same code as G_B.
struct EquivalenceCertificate {
    std::vector<std::size_t> perm;
    std::vector<Elem> scale;
    Matrix collineation;
};

inline constexpr std::uint64_t kEquivalenceNodeLimit = 20'000'000;
inline constexpr std::size_t kEquivalenceMaxPoints = 4096;

namespace detail {

// Invariant class of every support point: multiplicity plus the sorted
// multiset of hyperplane intersection sizes through it.
struct Profiles {
    std::map<std::vector<std::size_t>, int> ids;

    std::map<std::size_t, int> classes(const ProjectiveSystem& s, std::vector<std::size_t>& hyper_hist, std::vector<int>& class_hist) {
        const auto chars = hyperplane_chars(s);
        hyper_hist = chars;
        std::sort(hyper_hist.begin(), hyper_hist.end());
        std::map<std::size_t, int> out;
        for (const auto& [p, m] : s.multiplicities()) {
            std::vector<std::size_t> key{m};
            for (auto h : s.space().hyperplanes_through(p)) key.push_back(chars[h]);
            std::sort(key.begin() + 1, key.end());
            auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first;
            out[p] = it->second;
            class_hist.push_back(it->second);
        }
        std::sort(class_hist.begin(), class_hist.end());
        return out;
    }
};

// Coefficients of x in the basis, or nullopt if x is outside their span.
inline std::optional<Vec> coefficients(const gf::Field& f, const std::vector<Vec>& basis, const Vec& x) {
    const std::size_t len = x.size(), j = basis.size();
    Matrix m(len, j + 1);
    for (std::size_t c = 0; c < j; ++c)
        for (std::size_t r = 0; r < len; ++r) m(r, c) = basis[c][r];
    for (std::size_t r = 0; r < len; ++r) m(r, j) = x[r];
    const Echelon e = rref(f, m);
    if (!e.pivots.empty() && e.pivots.back() == j) return std::nullopt;
    Vec c(j, 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) c[e.pivots[r]] = e.reduced(r, j);
    return c;
}

class CollineationSearch {
   public:
    CollineationSearch(const ProjectiveSystem& a, const ProjectiveSystem& b, std::uint64_t limit) : A_(a), B_(b), limit_(limit) {}

    std::optional<Matrix> run() {
        const auto& sp = A_.space();
        if (sp.size() > kEquivalenceMaxPoints) throw GuardExceeded("equivalence: space too large for the collineation search");
        if (A_.n() != B_.n() || A_.multiplicities().size() != B_.multiplicities().size()) return std::nullopt;
        Profiles prof;
        std::vector<std::size_t> ha, hb;
        std::vector<int> ca, cb;
        acls_ = prof.classes(A_, ha, ca);
        bcls_ = prof.classes(B_, hb, cb);
        if (ha != hb || ca != cb) return std::nullopt;
        k_ = sp.vec_len();
        plan_basis();
        bvec_.resize(k_);
        lam_.assign(k_, 1);
        bidx_.resize(k_);
        if (!extend(0)) return std::nullopt;
        // T maps a_i to lam_i b_i: T = Bm * Am^{-1}.
        const auto& f = sp.field();
        Matrix am(k_, k_), bm(k_, k_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t r = 0; r < k_; ++r) {
                am(r, i) = avec_[i][r];
                bm(r, i) = f.mul(lam_[i], bvec_[i][r]);
            }
        return multiply(f, bm, *inverse(f, am));
    }

   private:
    // Greedy basis of A's support: each new point covers as many support points
    // as possible; ties go to the rarest invariant class, then the lowest index.
    void plan_basis() {
        const auto& sp = A_.space();
        const auto& f = sp.field();
        std::map<int, std::size_t> class_size;
        for (const auto& [p, c] : acls_) ++class_size[c];
        std::vector<std::size_t> pts;
        for (const auto& [p, m] : A_.multiplicities()) pts.push_back(p);
        std::vector<bool> covered(pts.size(), false);
        std::size_t covered_count = 0;
        for (std::size_t j = 0; j < k_; ++j) {
            std::size_t best = pts.size(), best_cover = 0, best_rarity = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (covered[i]) continue;
                auto trial = avec_;
                trial.push_back(sp.coords(pts[i]));
                std::size_t cover = 0;
                for (std::size_t t = 0; t < pts.size(); ++t)
                    if (coefficients(f, trial, sp.coords(pts[t]))) ++cover;
                const std::size_t rarity = class_size[acls_[pts[i]]];
                if (best == pts.size() || cover > best_cover || (cover == best_cover && rarity < best_rarity)) {
                    best = i;
                    best_cover = cover;
                    best_rarity = rarity;
                }
            }
            avec_.push_back(sp.coords(pts[best]));
            aidx_.push_back(pts[best]);
            std::vector<std::pair<std::size_t, Vec>> fresh;
            for (std::size_t t = 0; t < pts.size(); ++t) {
                if (covered[t]) continue;
                if (auto c = coefficients(f, avec_, sp.coords(pts[t]))) {
                    covered[t] = true;
                    ++covered_count;
                    fresh.emplace_back(pts[t], std::move(*c));
                }
            }
            checks_.push_back(std::move(fresh));
            span_count_.push_back(covered_count);
        }
    }

    bool extend(std::size_t j) {
        if (j == k_) return true;
        const auto& sp = B_.space();
        const auto& f = sp.field();
        const int want = acls_.at(aidx_[j]);
        SpanBuilder prev(f, k_);
        for (std::size_t i = 0; i < j; ++i) prev.insert(bvec_[i]);
        for (const auto& [bp, cls] : bcls_) {
            if (cls != want || prev.contains(sp.coords(bp))) continue;
            bvec_[j] = sp.coords(bp);
            bidx_[j] = bp;
            const unsigned lam_count = j == 0 ? 1 : f.q() - 1;
            for (unsigned l = 0; l < lam_count; ++l) {
                lam_[j] = j == 0 ? Elem{1} : static_cast<Elem>(l + 1);
                if (++nodes_ > limit_) throw GuardExceeded("equivalence: search limit exceeded; refusing to answer");
                if (!consistent(j)) continue;
                if (extend(j + 1)) return true;
            }
        }
        return false;
    }

    // New A points of level j map to B points of the same class, and the
    // image span holds exactly as many B points as the source span holds A points.
    bool consistent(std::size_t j) {
        const auto& sp = B_.space();
        const auto& f = sp.field();
        for (const auto& [p, c] : checks_[j]) {
            Vec y(k_, 0);
            for (std::size_t i = 0; i <= j; ++i) {
                const Elem s = f.mul(c[i], lam_[i]);
                if (s == 0) continue;
                for (std::size_t r = 0; r < k_; ++r) y[r] = f.add(y[r], f.mul(s, bvec_[i][r]));
            }
            const auto it = bcls_.find(sp.index_of(y));
            if (it == bcls_.end() || it->second != acls_.at(p)) return false;
        }
        if (j + 1 == k_) return true;
        SpanBuilder span(f, k_);
        for (std::size_t i = 0; i <= j; ++i) span.insert(bvec_[i]);
        std::size_t inside = 0;
        for (const auto& [bp, cls] : bcls_) inside += span.contains(sp.coords(bp));
        return inside == span_count_[j];
    }

    const ProjectiveSystem& A_;
    const ProjectiveSystem& B_;
    std::uint64_t limit_, nodes_ = 0;
    std::size_t k_ = 0;
    std::map<std::size_t, int> acls_, bcls_;
    std::vector<Vec> avec_, bvec_;
    std::vector<std::size_t> aidx_, bidx_;
    std::vector<Elem> lam_;
    std::vector<std::vector<std::pair<std::size_t, Vec>>> checks_;
    std::vector<std::size_t> span_count_;
};

// Nonzero columns grouped by the point they represent.
inline std::map<std::size_t, std::vector<std::size_t>> column_points(const ProjectiveSpace& sp, const LinearCode& c) {
    std::map<std::size_t, std::vector<std::size_t>> out;
    for (std::size_t j = 0; j < c.n(); ++j) {
        Vec col = c.generator().column(j);
        if (weight(col) == 0) continue;
        out[sp.index_of(col)].push_back(j);
    }
    return out;
}

}  // namespace detail

/// A collineation of the ambient space mapping system A onto system B
/// (points to points, multiplicities preserved), if one exists.
inline std::optional<Matrix> find_collineation(const ProjectiveSystem& a, const ProjectiveSystem& b, std::uint64_t node_limit = kEquivalenceNodeLimit) {
    if (a.space_ptr() != b.space_ptr()) throw std::invalid_argument("equivalence: systems live in different spaces");
    return detail::CollineationSearch(a, b, node_limit).run();
}

/// Generator matrix obtained from A by the certificate's monomial map.
inline LinearCode apply_certificate(const LinearCode& a, const EquivalenceCertificate& cert) {
    if (cert.perm.size() != a.n() || cert.scale.size() != a.n()) throw std::invalid_argument("certificate: wrong length");
    const auto& f = a.field();
    Matrix g(a.k(), a.n());
    for (std::size_t j = 0; j < a.n(); ++j) {
        if (cert.scale[j] == 0) throw std::invalid_argument("certificate: zero scale");
        for (std::size_t i = 0; i < a.k(); ++i) g(i, cert.perm[j]) = f.mul(cert.scale[j], a.generator()(i, j));
    }
    return LinearCode(a.field_ptr(), g);
}

/// The certificate is a monomial map whose image of A spans the same row space as B.
inline bool verify_certificate(const LinearCode& a, const LinearCode& b, const EquivalenceCertificate& cert) {
    if (a.n() != b.n() || a.k() != b.k() || a.field_ptr() != b.field_ptr()) return false;
    std::vector<bool> hit(a.n(), false);
    for (auto p : cert.perm) {
        if (p >= a.n() || hit[p]) return false;
        hit[p] = true;
    }
    const LinearCode img = apply_certificate(a, cert);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.k(); ++i) {
        rows.push_back(img.generator().row(i));
        rows.push_back(b.generator().row(i));
    }
    return rank(a.field(), Matrix::from_rows(rows)) == a.k();
}

/// Monomial equivalence of two codes over the same field, with a certificate.
/// Throws GuardExceeded instead of answering when the search grows too large.
inline std::optional<EquivalenceCertificate> are_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t node_limit = kEquivalenceNodeLimit) {
    if (a.field_ptr() != b.field_ptr()) throw std::invalid_argument("equivalence: codes over different fields");
    if (a.n() != b.n() || a.k() != b.k()) return std::nullopt;
    const auto& f = a.field();
    const std::size_t n = a.n(), k = a.k();
    EquivalenceCertificate cert;
    cert.perm.assign(n, 0);
    cert.scale.assign(n, 1);

    auto zero_cols = [&](const LinearCode& c) {
        std::vector<std::size_t> z;
        for (std::size_t j = 0; j < n; ++j)
            if (weight(c.generator().column(j)) == 0) z.push_back(j);
        return z;
    };
    const auto za = zero_cols(a), zb = zero_cols(b);
    if (za.size() != zb.size()) return std::nullopt;
    for (std::size_t i = 0; i < za.size(); ++i) cert.perm[za[i]] = zb[i];

    if (k == 1) {
        std::vector<std::size_t> na, nb;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.generator()(0, j)) na.push_back(j);
            if (b.generator()(0, j)) nb.push_back(j);
        }
        for (std::size_t i = 0; i < na.size(); ++i) {
            cert.perm[na[i]] = nb[i];
            cert.scale[na[i]] = f.div(b.generator()(0, nb[i]), a.generator()(0, na[i]));
        }
        cert.collineation = Matrix::from_rows({{1}});
        return cert;
    }

    auto space = projective_space(static_cast<int>(k) - 1, f.q());
    if (space->size() > kEquivalenceMaxPoints) throw GuardExceeded("equivalence: space too large for the collineation search");
    const auto pa = detail::column_points(*space, a), pb = detail::column_points(*space, b);
    auto system_of = [&](const std::map<std::size_t, std::vector<std::size_t>>& cols) {
        std::map<std::size_t, unsigned> mult;
        for (const auto& [p, js] : cols) mult[p] = static_cast<unsigned>(js.size());
        return ProjectiveSystem(space, std::move(mult));
    };
    const auto T = find_collineation(system_of(pa), system_of(pb), node_limit);
    if (!T) return std::nullopt;

    for (const auto& [p, js] : pa) {
        const Vec img = multiply(f, *T, space->coords(p));
        const auto& targets = pb.at(space->index_of(img));
        for (std::size_t i = 0; i < js.size(); ++i) {
            const Vec v = multiply(f, *T, a.generator().column(js[i]));
            const Vec u = b.generator().column(targets[i]);
            std::size_t t = 0;
            while (u[t] == 0) ++t;
            cert.perm[js[i]] = targets[i];
            cert.scale[js[i]] = f.div(u[t], v[t]);  // T (scale * col_A) = col_B
        }
    }
    cert.collineation = *T;
    return cert;
}

/// Partition of point sets into collineation classes. Classes list input
/// indices ascending and are ordered by their first member.
inline std::vector<std::vector<std::size_t>> classify(const std::vector<PointSet>& sets, unsigned q, unsigned k,
                                                      std::uint64_t node_limit = kEquivalenceNodeLimit) {
    auto space = projective_space(static_cast<int>(k) - 1, q);
    std::vector<ProjectiveSystem> systems;
    for (const auto& s : sets) {
        if (s.size() != space->size()) throw std::invalid_argument("classify: point set from a different space");
        systems.push_back(ProjectiveSystem::from_set(space, s));
    }
    // Bucket by cheap invariants before pairwise collineation searches.
    using Signature = std::pair<std::vector<std::size_t>, std::vector<int>>;
    std::map<Signature, std::vector<std::size_t>> buckets;
    detail::Profiles prof;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        Signature sig;
        prof.classes(systems[i], sig.first, sig.second);
        buckets[sig].push_back(i);
    }
    std::vector<std::vector<std::size_t>> classes;
    for (const auto& [sig, members] : buckets) {
        std::vector<std::vector<std::size_t>> local;
        for (auto i : members) {
            bool placed = false;
            for (auto& cls : local)
                if (find_collineation(systems[cls.front()], systems[i], node_limit)) {
                    cls.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) local.push_back({i});
        }
        for (auto& c : local) classes.push_back(std::move(c));
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace cutcode
