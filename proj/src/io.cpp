#include "nlper/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nlper/errors.hpp"

namespace nlper {

namespace {

Polyomino parse_pairs(const std::string& text) {
    std::vector<Cell> cells;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        Cell c;
        std::string extra;
        if (!(ls >> c.x >> c.y) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
        cells.push_back(c);
    }
    return Polyomino(std::move(cells));
}

Polyomino parse_grid(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::size_t first = 0;
    while (first < rows.size() && rows[first].empty()) ++first;
    std::vector<Cell> cells;
    const int height = static_cast<int>(rows.size() - first);
    for (std::size_t r = first; r < rows.size(); ++r) {
        const int y = height - 1 - static_cast<int>(r - first);
        for (std::size_t x = 0; x < rows[r].size(); ++x) {
            const char ch = rows[r][x];
            if (ch == '#')
                cells.push_back({static_cast<int>(x), y});
            else if (ch != '.')
                throw ParseError(std::string("unexpected grid character '") + ch + "'");
        }
    }
    return Polyomino(std::move(cells));
}

}  // namespace

Polyomino parse_polyomino(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw ParseError("empty polyomino description");
    const char c = text[pos];
    try {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') return parse_pairs(text);
        return parse_grid(text);
    } catch (const EmptyPolyomino& e) {
        throw ParseError(e.what());
    } catch (const DuplicateCell& e) {
        throw ParseError(e.what());
    }
}

Polyomino read_polyomino(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polyomino(buf.str());
}

std::string format_pairs(const Polyomino& p) {
    std::string out;
    for (const Cell& c : p.cells()) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
    return out;
}

void write_polyomino(const std::string& path, const Polyomino& p, bool grid) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << (grid ? p.to_string() : format_pairs(p));
}

}  // namespace nlper
