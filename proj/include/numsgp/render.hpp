#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "numsgp/paths.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/tritab.hpp"

namespace numsgp {

// Static renderings of labelled grids and staircase paths: fixed-width text
// art and minimal self-contained SVG. Byte format is owned by the CLI; the
// library only promises stability within a release.

namespace detail {

inline int digit_width(std::int64_t v) {
    return static_cast<int>(std::to_string(v).size());
}

inline std::string pad_left(const std::string& s, int width) {
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))),
                       ' ') +
           s;
}

}  // namespace detail

/// Text art of the word's path over the R(a,b) labelling: one line per grid
/// row, top row first. Labels of boxes below the path (the ideal's gaps)
/// are bracketed; the rest are padded flat.
inline std::string render_path_text(const std::string& word, std::int64_t a, std::int64_t b) {
    if (auto why = word_violation(word, a, b)) throw InvalidWord("render_path_text: " + *why);
    std::vector<std::int64_t> r = detail::r_profile(word);
    std::int64_t cols = r.back() + 2;  // path's rightmost descent, plus visible ideal cells
    int width = detail::digit_width(a * (cols - 1) + b * (a - 1));
    std::ostringstream out;
    for (std::int64_t y = a - 1; y >= 0; --y) {
        std::int64_t gap_cols = r[static_cast<std::size_t>(a - y - 1)];
        for (std::int64_t x = 0; x < cols; ++x) {
            std::string label = detail::pad_left(std::to_string(a * x + b * y), width);
            out << (x < gap_cols ? "[" + label + "]" : " " + label + " ");
        }
        out << '\n';
    }
    return out.str();
}

/// Text table of the three-generator grid, rows top to bottom, `columns`
/// cells per row.
inline std::string render_grid_text(const TabularGrid& g, std::int64_t columns) {
    if (columns < 1) throw BadArguments("render_grid_text: need at least one column");
    int width = detail::digit_width(g.d(1, columns));
    for (std::int64_t i = 1; i <= g.a(); ++i)
        width = std::max(width, detail::digit_width(g.d(i, columns)));
    std::ostringstream out;
    for (std::int64_t i = 1; i <= g.a(); ++i) {
        for (std::int64_t j = 1; j <= columns; ++j) {
            if (j > 1) out << ' ';
            out << detail::pad_left(std::to_string(g.d(i, j)), width);
        }
        out << '\n';
    }
    return out.str();
}

/// Grid rows as plain numbers (JSON/CSV feedstock).
inline std::vector<std::vector<std::int64_t>> grid_rows(const TabularGrid& g,
                                                        std::int64_t columns) {
    if (columns < 1) throw BadArguments("grid_rows: need at least one column");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::int64_t i = 1; i <= g.a(); ++i) {
        std::vector<std::int64_t> row;
        for (std::int64_t j = 1; j <= columns; ++j) row.push_back(g.d(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string to_csv(const std::vector<std::vector<std::int64_t>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << row[j];
        }
        out << '\n';
    }
    return out.str();
}

inline std::string to_latex_table(const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::ostringstream out;
    out << "\\begin{array}{" << std::string(cols, 'r') << "}\n";
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << " & ";
            out << row[j];
        }
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

/// 1 + q + 3q^{2} − ... with braced exponents.
inline std::string latex_polynomial(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int abs = c[i] < 0 ? Int(-c[i]) : c[i];
        if (first) {
            if (c[i] < 0) out << "-";
            first = false;
        } else {
            out << (c[i] < 0 ? " - " : " + ");
        }
        if (abs != 1 || i == 0) out << abs.str();
        if (i == 1) out << "q";
        else if (i > 1) out << "q^{" << i << "}";
    }
    return out.str();
}

namespace detail {

inline void svg_open(std::ostringstream& out, std::int64_t w, std::int64_t h) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\" font-family=\"monospace\" font-size=\"13\">\n";
}

inline void svg_cell(std::ostringstream& out, std::int64_t px, std::int64_t py,
                     std::int64_t cell, std::int64_t label, bool shaded) {
    out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\""
        << cell << "\" fill=\"" << (shaded ? "#d7d7d7" : "#ffffff")
        << "\" stroke=\"#888888\"/>\n";
    out << "  <text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 4
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
}

}  // namespace detail

/// Self-contained SVG of the labelled grid with the path drawn on top;
/// gap cells (below the path) are shaded.
inline std::string render_path_svg(const std::string& word, std::int64_t a, std::int64_t b) {
    if (auto why = word_violation(word, a, b)) throw InvalidWord("render_path_svg: " + *why);
    std::vector<std::int64_t> r = detail::r_profile(word);
    const std::int64_t cell = 44, margin = 10;
    std::int64_t cols = r.back() + 2;
    std::ostringstream out;
    detail::svg_open(out, cols * cell + 2 * margin, a * cell + 2 * margin);
    for (std::int64_t y = a - 1; y >= 0; --y) {
        std::int64_t gap_cols = r[static_cast<std::size_t>(a - y - 1)];
        for (std::int64_t x = 0; x < cols; ++x)
            detail::svg_cell(out, margin + x * cell, margin + (a - 1 - y) * cell, cell,
                             a * x + b * y, x < gap_cols);
    }
    // The path starts at the top-left corner (height a) and follows the
    // word; the implied horizontal tail is drawn one cell long.
    out << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\"";
    std::int64_t px = 0, py = 0;
    out << margin + px * cell << "," << margin + py * cell;
    for (char ch : word) {
        if (ch == 'R') ++px;
        else ++py;
        out << " " << margin + px * cell << "," << margin + py * cell;
    }
    out << " " << margin + (px + 1) * cell << "," << margin + py * cell;
    out << "\"/>\n</svg>\n";
    return out.str();
}

/// Self-contained SVG of the three-generator grid (no path overlay).
inline std::string render_grid_svg(const TabularGrid& g, std::int64_t columns) {
    if (columns < 1) throw BadArguments("render_grid_svg: need at least one column");
    const std::int64_t cell = 44, margin = 10;
    std::ostringstream out;
    detail::svg_open(out, columns * cell + 2 * margin, g.a() * cell + 2 * margin);
    for (std::int64_t i = 1; i <= g.a(); ++i)
        for (std::int64_t j = 1; j <= columns; ++j)
            detail::svg_cell(out, margin + (j - 1) * cell, margin + (i - 1) * cell, cell,
                             g.d(i, j), false);
    out << "</svg>\n";
    return out.str();
}

}  // namespace numsgp
