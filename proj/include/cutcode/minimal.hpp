// Minimality of linear codes, decided three ways: by support containment,
// by the weight-sum criterion of Heng, Ding and Zhou, and by the
// Ashikhmin-Barg sufficient condition.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutcode/code.hpp"

namespace cutcode {

enum class Criterion { naive, hdz, ab };

inline const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::naive: return "naive";
        case Criterion::hdz: return "hdz";
        case Criterion::ab: return "ab";
    }
    return "?";
}

struct MinimalityReport {
    bool minimal = true;
    /// (c, c') with supp(c) strictly inside supp(c') and c, c' independent.
    std::optional<std::pair<Vec, Vec>> witness;
    Criterion criterion = Criterion::naive;
};

struct AbResult {
    bool applies = false;
    std::size_t w_min = 0, w_max = 0;
};

namespace detail {

// One codeword per 1-dimensional subspace (message with leading coordinate 1),
// in lexicographic message order.
struct ProjectiveCodewords {
    std::size_t n = 0, words = 0;
    std::vector<Vec> messages, codewords;
    std::vector<std::uint64_t> supp;

    const std::uint64_t* support(std::size_t i) const { return supp.data() + i * words; }

    bool subset(std::size_t i, std::size_t j) const {
        const auto* a = support(i);
        const auto* b = support(j);
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }
};

inline ProjectiveCodewords projective_codewords(const LinearCode& c) {
    const std::uint64_t total = c.message_count();
    const unsigned q = c.field().q();
    ProjectiveCodewords out;
    out.n = c.n();
    out.words = (c.n() + 63) / 64;
    Vec msg(c.k());
    for (std::uint64_t key = 1; key < total; ++key) {
        std::uint64_t x = key;
        for (std::size_t i = c.k(); i-- > 0;) {
            msg[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        std::size_t lead = 0;
        while (msg[lead] == 0) ++lead;
        if (msg[lead] != 1) continue;
        Vec cw = c.encode(msg);
        std::vector<std::uint64_t> s(out.words, 0);
        for (std::size_t j = 0; j < c.n(); ++j)
            if (cw[j]) s[j / 64] |= std::uint64_t{1} << (j % 64);
        out.supp.insert(out.supp.end(), s.begin(), s.end());
        out.messages.push_back(msg);
        out.codewords.push_back(std::move(cw));
    }
    return out;
}

// Given supp(c) within supp(c2), c and c2 independent, returns a pair whose
// containment is strict.
inline std::pair<Vec, Vec> strict_witness(const gf::Field& f, Vec c, Vec c2) {
    if (weight(c) < weight(c2)) return {std::move(c), std::move(c2)};
    std::size_t t = 0;
    while (c[t] == 0) ++t;
    const Elem lambda = f.div(c2[t], c[t]);
    Vec smaller(c2.size());
    for (std::size_t j = 0; j < c2.size(); ++j) smaller[j] = f.sub(c2[j], f.mul(lambda, c[j]));
    return {std::move(smaller), std::move(c2)};
}

}  // namespace detail

/// No codeword independent of c has its support inside supp(c).
inline bool is_minimal_codeword(const LinearCode& code, const Vec& c) {
    if (!code.contains(c)) throw std::invalid_argument("is_minimal_codeword: vector is not a codeword");
    if (weight(c) == 0) throw std::invalid_argument("is_minimal_codeword: zero codeword");
    const auto pc = detail::projective_codewords(code);
    const gf::Field& f = code.field();
    Vec cn = c;
    {
        std::size_t t = 0;
        while (cn[t] == 0) ++t;
        const Elem s = f.inv(cn[t]);
        for (auto& x : cn) x = f.mul(x, s);
    }
    for (std::size_t i = 0; i < pc.codewords.size(); ++i) {
        const Vec& d = pc.codewords[i];
        // Proportional iff equal after scaling to a leading 1.
        Vec dn = d;
        std::size_t t = 0;
        while (dn[t] == 0) ++t;
        const Elem s = f.inv(dn[t]);
        for (auto& x : dn) x = f.mul(x, s);
        if (dn == cn) continue;
        bool inside = true;
        for (std::size_t j = 0; j < d.size() && inside; ++j) inside = d[j] == 0 || c[j] != 0;
        if (inside) return false;
    }
    return true;
}

/// Definition check: no support of one projective codeword inside another's.
inline MinimalityReport is_minimal_naive(const LinearCode& code) {
    const auto pc = detail::projective_codewords(code);
    const std::size_t P = pc.codewords.size();
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j) {
            if (i == j || !pc.subset(i, j)) continue;
            return {false, detail::strict_witness(code.field(), pc.codewords[i], pc.codewords[j]), Criterion::naive};
        }
    return {true, std::nullopt, Criterion::naive};
}

/// Minimal iff for all independent a, b:
///   sum_{lambda != 0} wt(a + lambda b) != (q-1) wt(a) - wt(b).
/// Equality holds exactly when supp(b) lies inside supp(a).
inline MinimalityReport is_minimal_hdz(const LinearCode& code) {
    const gf::Field& f = code.field();
    const unsigned q = f.q();
    const std::size_t k = code.k();
    const std::uint64_t total = code.message_count();

    // Weight of every message's codeword, indexed by the big-endian base-q key.
    std::vector<std::uint32_t> wt(total, 0);
    {
        Vec msg(k);
        for (std::uint64_t key = 1; key < total; ++key) {
            std::uint64_t x = key;
            for (std::size_t i = k; i-- > 0;) {
                msg[i] = static_cast<Elem>(x % q);
                x /= q;
            }
            wt[key] = static_cast<std::uint32_t>(weight(code.encode(msg)));
        }
    }
    auto key_of = [&](const Vec& m) {
        std::uint64_t key = 0;
        for (auto x : m) key = key * q + x;
        return key;
    };

    std::vector<Vec> reps;
    for (std::uint64_t key = 1; key < total; ++key) {
        Vec msg(k);
        std::uint64_t x = key;
        for (std::size_t i = k; i-- > 0;) {
            msg[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        std::size_t lead = 0;
        while (msg[lead] == 0) ++lead;
        if (msg[lead] == 1) reps.push_back(std::move(msg));
    }

    Vec sum(k);
    for (const auto& b : reps)
        for (const auto& a : reps) {
            if (&a == &b) continue;
            std::uint64_t lhs = 0;
            for (unsigned lam = 1; lam < q; ++lam) {
                for (std::size_t i = 0; i < k; ++i) sum[i] = f.add(a[i], f.mul(static_cast<Elem>(lam), b[i]));
                lhs += wt[key_of(sum)];
            }
            const std::int64_t rhs = static_cast<std::int64_t>(q - 1) * wt[key_of(a)] - static_cast<std::int64_t>(wt[key_of(b)]);
            if (static_cast<std::int64_t>(lhs) == rhs)
                return {false, detail::strict_witness(f, code.encode(b), code.encode(a)), Criterion::hdz};
        }
    return {true, std::nullopt, Criterion::hdz};
}

/// q * w_min > (q-1) * w_max implies minimality; failure is inconclusive.
inline AbResult ab_sufficient(const LinearCode& code) {
    const auto& wd = code.weight_distribution();
    AbResult r;
    r.w_min = wd.min_weight();
    r.w_max = wd.max_weight();
    const unsigned q = code.field().q();
    r.applies = static_cast<std::uint64_t>(q) * r.w_min > static_cast<std::uint64_t>(q - 1) * r.w_max;
    return r;
}

/// Minimal, and deleting any single coordinate loses minimality or dimension.
inline bool is_reduced(const LinearCode& code) {
    if (!is_minimal_naive(code).minimal) throw std::invalid_argument("is_reduced: code is not minimal");
    for (std::size_t j = 0; j < code.n(); ++j) {
        try {
            if (is_minimal_naive(puncture(code, {j})).minimal) return false;
        } catch (const RankDrop&) {
        }
    }
    return true;
}

}  // namespace cutcode
