// Finite field arithmetic for GF(q), q = p^m <= 64.
//
// Elements are encoded as integers in [0, q): the base-p digits of the value
// are the coefficients (low to high) of the polynomial representative modulo
// the field's modulus. 0 is the zero element and 1 the unit. Multiplication
// goes through exp/log tables built from a primitive root.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutcode::gf {

using Elem = std::uint8_t;

inline constexpr unsigned kMaxOrder = 64;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// {p, m} with q = p^m, or {0, 0} if q is not a prime power.
inline std::pair<unsigned, unsigned> prime_power(unsigned q) {
    if (q < 2) return {0, 0};
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return {0, 0};
    return {p, m};
}

// Coefficients c0..cm (low to high), monic. Conway polynomials where known.
inline const std::map<unsigned, std::vector<unsigned>>& shipped_moduli() {
    static const std::map<unsigned, std::vector<unsigned>> table = {
        {4, {1, 1, 1}},              // x^2 + x + 1
        {8, {1, 1, 0, 1}},           // x^3 + x + 1
        {16, {1, 1, 0, 0, 1}},       // x^4 + x + 1
        {32, {1, 0, 1, 0, 0, 1}},    // x^5 + x^2 + 1
        {64, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
        {9, {2, 2, 1}},              // x^2 + 2x + 2
        {27, {1, 2, 0, 1}},          // x^3 + 2x + 1
        {25, {2, 4, 1}},             // x^2 + 4x + 2
        {49, {3, 6, 1}},             // x^2 + 6x + 3
    };
    return table;
}

// Remainder of a modulo b over GF(p); b must have a nonzero leading coefficient.
inline std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    unsigned lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1) ++lead_inv;
    while (a.size() > db) {
        const unsigned c = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg < 1) return false;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        unsigned long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long code = 0; code < count; ++code) {
            std::vector<unsigned> g(d + 1, 0);
            unsigned long c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
   public:
    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    /// Modulus coefficients c0..cm; empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool contains(unsigned v) const { return v < q_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("gf: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
    }

    /// alpha^i for the primitive element alpha.
    Elem exp(unsigned i) const { return exp_[i % (q_ - 1)]; }
    unsigned log(Elem a) const {
        if (a == 0) throw std::domain_error("gf: log of zero");
        return log_[a];
    }
    Elem primitive() const { return exp_[1 % (q_ - 1)]; }

    /// Nonzero elements in encoding order.
    std::vector<Elem> units() const {
        std::vector<Elem> out;
        for (unsigned v = 1; v < q_; ++v) out.push_back(static_cast<Elem>(v));
        return out;
    }

    /// `field q=<q> p=<p> m=<m>[ modulus=c0,...,cm]`
    std::string header() const {
        std::ostringstream os;
        os << "field q=" << q_ << " p=" << p_ << " m=" << m_;
        if (m_ > 1) {
            os << " modulus=";
            for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        }
        return os.str();
    }

   private:
    friend FieldPtr field_create(unsigned q);

    explicit Field(unsigned q) : q_(q) {
        const auto [p, m] = detail::prime_power(q);
        if (p == 0) throw std::invalid_argument("gf: " + std::to_string(q) + " is not a prime power");
        if (q > kMaxOrder) throw std::invalid_argument("gf: q=" + std::to_string(q) + " exceeds cap 64");
        p_ = p;
        m_ = m;
        build_additive();
        if (m_ == 1)
            build_prime();
        else
            build_extension();
    }

    void build_additive() {
        add_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            for (unsigned b = 0; b < q_; ++b) {
                unsigned x = a, y = b, r = 0, scale = 1;
                for (unsigned i = 0; i < m_; ++i) {
                    r += ((x % p_ + y % p_) % p_) * scale;
                    x /= p_;
                    y /= p_;
                    scale *= p_;
                }
                add_[a * q_ + b] = static_cast<Elem>(r);
                if (r == 0) neg_[a] = static_cast<Elem>(b);
            }
        }
    }

    void build_prime() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        for (unsigned g = 1; g < q_; ++g) {
            unsigned x = 1, order = 0;
            do {
                x = (x * g) % q_;
                ++order;
            } while (x != 1);
            if (order == q_ - 1) {
                x = 1;
                for (unsigned i = 0; i < q_ - 1; ++i) {
                    exp_[i] = static_cast<Elem>(x);
                    log_[x] = i;
                    x = (x * g) % q_;
                }
                return;
            }
        }
        throw std::logic_error("gf: no primitive root mod " + std::to_string(q_));
    }

    void build_extension() {
        const auto& table = detail::shipped_moduli();
        const auto it = table.find(q_);
        if (it == table.end()) throw std::logic_error("gf: no shipped modulus for q=" + std::to_string(q_));
        modulus_ = it->second;
        if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
            throw std::logic_error("gf: shipped modulus for q=" + std::to_string(q_) + " has wrong shape");
        if (!detail::is_irreducible(modulus_, p_))
            throw std::logic_error("gf: shipped modulus for q=" + std::to_string(q_) + " is reducible");

        // Powers of x: multiply the digit vector by x and reduce x^m = -(c0 + ... + c_{m-1} x^{m-1}).
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::vector<unsigned> cur(m_, 0);
        cur[0] = 1;
        std::vector<bool> seen(q_, false);
        for (unsigned i = 0; i < q_ - 1; ++i) {
            unsigned v = 0, scale = 1;
            for (unsigned j = 0; j < m_; ++j) {
                v += cur[j] * scale;
                scale *= p_;
            }
            if (seen[v]) throw std::logic_error("gf: shipped modulus for q=" + std::to_string(q_) + " is not primitive");
            seen[v] = true;
            exp_[i] = static_cast<Elem>(v);
            log_[v] = i;
            const unsigned top = cur[m_ - 1];
            for (unsigned j = m_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (unsigned j = 0; j < m_; ++j) cur[j] = (cur[j] + (p_ - modulus_[j] % p_) * top) % p_;
        }
        bool back_to_one = cur[0] == 1;
        for (unsigned j = 1; j < m_; ++j) back_to_one = back_to_one && cur[j] == 0;
        if (!back_to_one)
            throw std::logic_error("gf: shipped modulus for q=" + std::to_string(q_) + " is not primitive");
    }

    unsigned p_ = 0, m_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_, neg_, exp_;
    std::vector<unsigned> log_;
};

/// The field of order q. One shared instance per q, so fields compare by identity.
inline FieldPtr field_create(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = registry.find(q); it != registry.end()) return it->second;
    FieldPtr f(new Field(q));
    registry.emplace(q, f);
    return f;
}

/// An element bound to its field; arithmetic across different fields throws.
class Element {
   public:
    Element(FieldPtr field, unsigned value) : field_(std::move(field)), value_(0) {
        if (!field_) throw std::invalid_argument("gf: null field");
        if (!field_->contains(value))
            throw std::out_of_range("gf: value " + std::to_string(value) + " not in GF(" + std::to_string(field_->q()) + ")");
        value_ = static_cast<Elem>(value);
    }

    Elem value() const { return value_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }

    Element inv() const { return {field_, field_->inv(value_)}; }

    friend Element operator+(const Element& a, const Element& b) { return {same(a, b), a.field_->add(a.value_, b.value_)}; }
    friend Element operator-(const Element& a, const Element& b) { return {same(a, b), a.field_->sub(a.value_, b.value_)}; }
    friend Element operator*(const Element& a, const Element& b) { return {same(a, b), a.field_->mul(a.value_, b.value_)}; }
    friend Element operator/(const Element& a, const Element& b) { return {same(a, b), a.field_->div(a.value_, b.value_)}; }
    Element operator-() const { return {field_, field_->neg(value_)}; }
    friend bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

   private:
    static const FieldPtr& same(const Element& a, const Element& b) {
        if (a.field_ != b.field_) throw std::invalid_argument("gf: operands from different fields");
        return a.field_;
    }

    FieldPtr field_;
    Elem value_;
};

inline Element field_add(const Element& a, const Element& b) { return a + b; }
inline Element field_mul(const Element& a, const Element& b) { return a * b; }
inline Element field_inv(const Element& a) { return a.inv(); }

}  // namespace cutcode::gf
