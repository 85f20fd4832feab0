#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latred/errors.hpp"
#include "latred/linalg.hpp"
#include "latred/numeric.hpp"

namespace latred {

// A lattice basis: n linearly independent integer row vectors of dimension m,
// m >= n. Treated as an immutable value everywhere.
struct LatticeBasis {
    IntMat rows;

    std::size_t n() const { return rows.size(); }
    std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }

    bool operator==(const LatticeBasis& o) const = default;
};

inline IntMat gram(const LatticeBasis& b) {
    std::size_t n = b.n();
    IntMat g(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = dot(b.rows[i], b.rows[j]);
            g[j][i] = g[i][j];
        }
    }
    return g;
}

// Shape and rank checks; throws on violation.
inline void validate(const LatticeBasis& b) {
    if (b.n() == 0) throw UserError("basis must contain at least one vector");
    std::size_t m = b.dim();
    if (m < b.n()) throw UserError("basis dimension m must be >= n");
    for (const auto& r : b.rows)
        if (r.size() != m) throw UserError("basis rows must have equal dimension");
    if (sgn(det_bareiss(gram(b))) == 0)
        throw DegenerateBasis("basis vectors are linearly dependent");
}

// Zero inner products count as obtuse (the condition is <= 0).
inline bool is_obtuse(const IntMat& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (sgn(g[i][j]) > 0) return false;
    return true;
}

inline bool is_obtuse(const LatticeBasis& b) { return is_obtuse(gram(b)); }

// Number of strictly positive Gram off-diagonal pairs; 0 iff obtuse.
inline std::size_t obtuseness_defect(const LatticeBasis& b) {
    IntMat g = gram(b);
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (sgn(g[i][j]) > 0) ++count;
    return count;
}

inline std::size_t max_entry_bits(const LatticeBasis& b) {
    std::size_t bits = 0;
    for (const auto& row : b.rows)
        for (const auto& e : row) bits = std::max(bits, bit_length(e));
    return bits;
}

// --- text format ------------------------------------------------------------
// One row per line, whitespace-separated decimal integers. Bracketed input in
// the style [[1 2][3 4]] is accepted on read; plain rows are written.

inline LatticeBasis read_basis(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    IntMat rows;
    if (all.find('[') != std::string::npos) {
        // rows are delimited by '[' ... ']'; the outermost pair wraps them all
        for (char& c : all)
            if (c == ',') c = ' ';
        std::size_t pos = all.find('[');
        std::size_t outer_end = all.rfind(']');
        if (outer_end == std::string::npos) throw UserError("unbalanced brackets in basis file");
        pos += 1;
        while (true) {
            std::size_t open = all.find('[', pos);
            if (open == std::string::npos || open >= outer_end) break;
            std::size_t close = all.find(']', open + 1);
            if (close == std::string::npos) throw UserError("unbalanced brackets in basis file");
            std::istringstream row_in(all.substr(open + 1, close - open - 1));
            IntVec row;
            std::string tok;
            while (row_in >> tok) {
                try {
                    row.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    throw UserError("bad integer in basis file: " + tok);
                }
            }
            if (!row.empty()) rows.push_back(std::move(row));
            pos = close + 1;
        }
    } else {
        std::istringstream lines(all);
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream row_in(line);
            IntVec row;
            std::string tok;
            while (row_in >> tok) {
                try {
                    row.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    throw UserError("bad integer in basis file: " + tok);
                }
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) throw UserError("empty basis file");
    std::size_t m = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m) throw UserError("ragged rows in basis file");
    return LatticeBasis{std::move(rows)};
}

inline void write_basis(std::ostream& out, const LatticeBasis& b) {
    for (const auto& row : b.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j].get_str();
        }
        out << '\n';
    }
}

inline std::string to_text(const LatticeBasis& b) {
    std::ostringstream os;
    write_basis(os, b);
    return os.str();
}

}  // namespace latred
