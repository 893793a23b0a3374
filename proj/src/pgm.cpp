#include "gifzs/pgm.hpp"

#include <fstream>
#include <stdexcept>

namespace gifzs {

namespace {

int read_header_int(std::istream& in) {
    // Skips whitespace and '#' comment lines between header tokens.
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    if (ch == EOF || !std::isdigit(ch))
        throw std::runtime_error("PGM: malformed header");
    int value = 0;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        ch = in.get();
    }
    if (ch != EOF) in.unget();
    return value;
}

} // namespace

void write_pgm(const std::string& path, const FuzzyGrid& grid) {
    const DomainBox& box = grid.box();
    if (box.dim() > 2)
        throw std::invalid_argument("write_pgm: only 1-D and 2-D grids render as images");
    CellIndex width = box.cells()[0];
    CellIndex height = box.dim() == 2 ? box.cells()[1] : 1;
    bool wide = grid.levels() > 255;

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_pgm: cannot open '" + path + "'");
    out << "P5\n" << width << " " << height << "\n" << grid.levels() << "\n";
    for (CellIndex row = 0; row < height; ++row) {
        CellIndex axis1 = height - 1 - row; // top row = highest coordinate
        for (CellIndex col = 0; col < width; ++col) {
            CellIndex flat = box.dim() == 2 ? col + width * axis1 : col;
            Level v = grid.at(flat);
            if (wide) out.put(static_cast<char>((v >> 8) & 0xff));
            out.put(static_cast<char>(v & 0xff));
        }
    }
    if (!out)
        throw std::runtime_error("write_pgm: write failed for '" + path + "'");
}

FuzzyGrid read_pgm(const std::string& path, const std::vector<double>& lo,
                   const std::vector<double>& hi, bool wrap, bool force_2d) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("read_pgm: cannot open '" + path + "'");
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5')
        throw std::runtime_error("read_pgm: not a binary PGM (P5) file");
    int width = read_header_int(in);
    int height = read_header_int(in);
    int maxval = read_header_int(in);
    if (width <= 0 || height <= 0 || maxval < 1 || maxval > 65535)
        throw std::runtime_error("read_pgm: invalid dimensions or maxval");
    in.get(); // single whitespace byte before the raster

    bool wide = maxval > 255;
    bool one_d = height == 1 && !force_2d;
    int dim = one_d ? 1 : 2;
    std::vector<double> use_lo = lo.empty() ? std::vector<double>(dim, 0.0) : lo;
    std::vector<double> use_hi = hi.empty() ? std::vector<double>(dim, 1.0) : hi;
    if (static_cast<int>(use_lo.size()) != dim || static_cast<int>(use_hi.size()) != dim)
        throw std::invalid_argument("read_pgm: domain bounds dimension mismatch");
    std::vector<CellIndex> cells;
    cells.push_back(static_cast<CellIndex>(width));
    if (!one_d) cells.push_back(static_cast<CellIndex>(height));
    DomainBox box(use_lo, use_hi, cells, wrap);

    std::vector<Level> values(box.total_cells(), 0);
    for (int row = 0; row < height; ++row) {
        int axis1 = height - 1 - row;
        for (int col = 0; col < width; ++col) {
            int hi_byte = wide ? in.get() : 0;
            int lo_byte = in.get();
            if (lo_byte == EOF || (wide && hi_byte == EOF))
                throw std::runtime_error("read_pgm: truncated raster");
            Level v = static_cast<Level>((hi_byte << 8) | lo_byte);
            if (v > maxval)
                throw std::runtime_error("read_pgm: sample above maxval");
            CellIndex flat = one_d ? static_cast<CellIndex>(col)
                                   : static_cast<CellIndex>(col + width * axis1);
            values[flat] = v;
        }
    }
    return FuzzyGrid(box, maxval, std::move(values));
}

} // namespace gifzs
