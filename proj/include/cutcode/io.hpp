// Text formats: generator matrices (.gmat), point sets (.pts), and JSON
// export of weight distributions.
//
//   .gmat   field q=<q> p=<p> m=<m>[ modulus=<c0,...,cm>]
//           k=<k> n=<n>
//           k rows of n space-separated element integers
//
//   .pts    field header as above
//           N=<N>
//           one point per line: comma-separated coordinates, optional *<multiplicity>
//
// Blank lines and lines starting with '#' are ignored.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cutcode/code.hpp"
#include "cutcode/correspond.hpp"
#include "cutcode/errors.hpp"
#include "cutcode/pg.hpp"

namespace cutcode {

namespace detail {

struct Lines {
    std::vector<std::pair<std::size_t, std::string>> items;  // (1-based line number, text)
    std::size_t last = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            items.emplace_back(no, line.substr(first));
        }
        last = no;
    }
};

inline unsigned parse_uint(const std::string& s, std::size_t line, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw ParseError(line, "expected a nonnegative integer for " + what + ", got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

// key=value tokens of a line; throws on anything else.
inline std::map<std::string, std::string> key_values(const std::string& text, std::size_t line, std::size_t skip = 0) {
    std::istringstream in(text);
    std::string tok;
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < skip; ++i) in >> tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + tok + "'");
        if (!out.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) throw ParseError(line, "duplicate key '" + tok.substr(0, eq) + "'");
    }
    return out;
}

inline gf::FieldPtr parse_field_header(const Lines& lines) {
    if (lines.items.empty()) throw ParseError(1, "missing field header");
    const auto& [no, text] = lines.items.front();
    if (text.rfind("field", 0) != 0 || (text.size() > 5 && text[5] != ' ' && text[5] != '\t'))
        throw ParseError(no, "expected 'field q=<q> p=<p> m=<m>'");
    auto kv = key_values(text, no, 1);
    for (const auto& [key, value] : kv)
        if (key != "q" && key != "p" && key != "m" && key != "modulus") throw ParseError(no, "unknown header key '" + key + "'");
    if (!kv.count("q") || !kv.count("p") || !kv.count("m")) throw ParseError(no, "field header needs q, p and m");
    const unsigned q = parse_uint(kv["q"], no, "q"), p = parse_uint(kv["p"], no, "p"), m = parse_uint(kv["m"], no, "m");
    gf::FieldPtr f;
    try {
        f = gf::field_create(q);
    } catch (const std::exception& e) {
        throw ParseError(no, e.what());
    }
    if (f->p() != p || f->m() != m) throw ParseError(no, "p and m do not match q=" + std::to_string(q));
    if (m > 1) {
        if (!kv.count("modulus")) throw ParseError(no, "extension field header needs modulus=");
        std::vector<unsigned> mod;
        std::istringstream in(kv["modulus"]);
        std::string c;
        while (std::getline(in, c, ',')) mod.push_back(parse_uint(c, no, "modulus coefficient"));
        if (mod != f->modulus()) throw ParseError(no, "modulus differs from the built-in one (" + f->header() + ")");
    } else if (kv.count("modulus")) {
        throw ParseError(no, "prime field header takes no modulus");
    }
    return f;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    if (sep == ' ') {
        while (in >> cur) out.push_back(cur);
        return out;
    }
    while (std::getline(in, cur, sep)) {
        const auto a = cur.find_first_not_of(" \t"), b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? std::string() : cur.substr(a, b - a + 1));
    }
    return out;
}

}  // namespace detail

inline std::string write_gmat(const LinearCode& c) {
    std::ostringstream os;
    os << c.field().header() << "\n" << "k=" << c.k() << " n=" << c.n() << "\n";
    for (std::size_t r = 0; r < c.k(); ++r) {
        for (std::size_t j = 0; j < c.n(); ++j) os << (j ? " " : "") << static_cast<unsigned>(c.generator()(r, j));
        os << "\n";
    }
    return os.str();
}

inline LinearCode parse_gmat(const std::string& text) {
    const detail::Lines lines(text);
    auto f = detail::parse_field_header(lines);
    if (lines.items.size() < 2) throw ParseError(lines.last + 1, "missing 'k=<k> n=<n>' line");
    const auto& [dno, dims] = lines.items[1];
    auto kv = detail::key_values(dims, dno);
    if (kv.size() != 2 || !kv.count("k") || !kv.count("n")) throw ParseError(dno, "expected 'k=<k> n=<n>'");
    const unsigned k = detail::parse_uint(kv["k"], dno, "k"), n = detail::parse_uint(kv["n"], dno, "n");
    if (k < 1 || n < k) throw ParseError(dno, "need 1 <= k <= n");
    Matrix g(k, n);
    for (unsigned r = 0; r < k; ++r) {
        if (lines.items.size() < 3 + r) throw ParseError(lines.last + 1, "expected " + std::to_string(k) + " matrix rows, got " + std::to_string(r));
        const auto& [no, row] = lines.items[2 + r];
        const auto toks = detail::split(row, ' ');
        if (toks.size() != n) throw ParseError(no, "expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
        for (unsigned j = 0; j < n; ++j) {
            const unsigned v = detail::parse_uint(toks[j], no, "matrix entry");
            if (!f->contains(v)) throw ParseError(no, "entry " + toks[j] + " outside GF(" + std::to_string(f->q()) + ")");
            g(r, j) = static_cast<Elem>(v);
        }
    }
    if (lines.items.size() > 2 + k) throw ParseError(lines.items[2 + k].first, "unexpected content after the matrix rows");
    try {
        return LinearCode(f, std::move(g));
    } catch (const std::invalid_argument& e) {
        throw ParseError(dno, e.what());
    }
}

/// Points with multiplicities in PG(N,q), as read from a .pts file.
struct PointFile {
    SpacePtr space;
    std::map<std::size_t, unsigned> multiplicities;

    PointSet support() const {
        PointSet s = space->empty_set();
        for (const auto& [p, m] : multiplicities) s.set(p);
        return s;
    }
};

inline std::string write_pts(const ProjectiveSpace& space, const std::map<std::size_t, unsigned>& mult) {
    std::ostringstream os;
    os << space.field().header() << "\n" << "N=" << space.dim() << "\n";
    for (const auto& [p, m] : mult) {
        const Vec& c = space.coords(p);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << static_cast<unsigned>(c[i]);
        if (m != 1) os << "*" << m;
        os << "\n";
    }
    return os.str();
}

inline std::string write_pts(const ProjectiveSystem& s) { return write_pts(s.space(), s.multiplicities()); }

inline std::string write_pts(const ProjectiveSpace& space, const std::vector<std::size_t>& points) {
    std::map<std::size_t, unsigned> mult;
    for (auto p : points) ++mult[p];
    return write_pts(space, mult);
}

inline PointFile parse_pts(const std::string& text) {
    const detail::Lines lines(text);
    auto f = detail::parse_field_header(lines);
    if (lines.items.size() < 2) throw ParseError(lines.last + 1, "missing 'N=<N>' line");
    const auto& [dno, dims] = lines.items[1];
    auto kv = detail::key_values(dims, dno);
    if (kv.size() != 1 || !kv.count("N")) throw ParseError(dno, "expected 'N=<N>'");
    const unsigned N = detail::parse_uint(kv["N"], dno, "N");
    PointFile out;
    try {
        out.space = projective_space(static_cast<int>(N), f->q());
    } catch (const std::invalid_argument& e) {
        throw ParseError(dno, e.what());
    }
    for (std::size_t i = 2; i < lines.items.size(); ++i) {
        const auto& [no, text_line] = lines.items[i];
        std::string coords = text_line;
        unsigned mult = 1;
        if (const auto star = text_line.find('*'); star != std::string::npos) {
            coords = text_line.substr(0, star);
            auto m = text_line.substr(star + 1);
            m.erase(0, m.find_first_not_of(" \t"));
            m.erase(m.find_last_not_of(" \t") + 1);
            mult = detail::parse_uint(m, no, "multiplicity");
            if (mult == 0) throw ParseError(no, "multiplicity must be positive");
        }
        const auto toks = detail::split(coords, ',');
        if (toks.size() != N + 1) throw ParseError(no, "expected " + std::to_string(N + 1) + " coordinates, got " + std::to_string(toks.size()));
        Vec v(N + 1);
        for (std::size_t t = 0; t <= N; ++t) {
            const unsigned x = detail::parse_uint(toks[t], no, "coordinate");
            if (!f->contains(x)) throw ParseError(no, "coordinate " + toks[t] + " outside GF(" + std::to_string(f->q()) + ")");
            v[t] = static_cast<Elem>(x);
        }
        if (weight(v) == 0) throw ParseError(no, "zero vector is not a point");
        out.multiplicities[out.space->index_of(v)] += mult;
    }
    if (out.multiplicities.empty()) throw ParseError(lines.last + 1, "no points");
    return out;
}

/// {"n":..,"k":..,"q":..,"A":{"0":1,...}} with the nonzero counts only.
inline nlohmann::ordered_json to_json(const WeightDistribution& wd) {
    nlohmann::ordered_json j;
    j["n"] = wd.n;
    j["k"] = wd.k;
    j["q"] = wd.q;
    nlohmann::ordered_json a = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < wd.A.size(); ++i)
        if (wd.A[i]) a[std::to_string(i)] = wd.A[i];
    j["A"] = std::move(a);
    return j;
}

}  // namespace cutcode
