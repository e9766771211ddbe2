#include "sympdeg/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sympdeg::render {

std::vector<std::string> matrix_lines(const RankSequence& r) {
    int width = 1;
    for (const auto& row : r.rows())
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::vector<std::string> out;
    for (int i = 1; i <= r.n(); ++i) {
        std::ostringstream os;
        for (int j = 1; j <= r.n(); ++j) {
            if (j > 1) os << ' ';
            std::string cell = j < i ? "" : std::to_string(r(i, j));
            os << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell;
        }
        out.push_back(os.str());
    }
    return out;
}

std::string coefficient_quiver(const Representation& rep) {
    std::ostringstream os;
    for (const auto& [s, m] : rep.multiplicities()) {
        for (int c = 0; c < m; ++c) {
            for (int v = 1; v <= rep.n(); ++v) {
                if (v > 1) os << (s.i < v && v <= s.j ? '-' : ' ');
                os << (s.i <= v && v <= s.j ? '.' : ' ');
            }
            os << '\n';
        }
    }
    return os.str();
}

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::size_t widest(const std::vector<std::string>& v) {
    std::size_t w = 0;
    for (const auto& s : v) w = std::max(w, s.size());
    return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

}  // namespace

std::string sym_path_table(const std::vector<DegenStep>& path) {
    const std::vector<std::string> head{"step", "M(i)", "N(i)", "L", "Z(i)", "coefficient quiver of Z(i)"};
    std::vector<std::vector<std::vector<std::string>>> cells;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto& st = path[k];
        std::string l = "-";
        if (st.L) {
            const int n = st.M.n();
            if (st.L->j == n)
                l = "P_" + std::to_string(st.L->i) + " = " + st.L->str();
            else if (st.L->i == st.L->j)
                l = "S_" + std::to_string(st.L->i) + " = " + st.L->str();
            else
                l = st.L->str();
        }
        cells.push_back({{"(" + std::to_string(k) + ")"},
                         matrix_lines(st.M),
                         matrix_lines(st.N),
                         {l},
                         matrix_lines(st.Z),
                         split_lines(coefficient_quiver(rep_of(st.Z)))});
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        w[c] = head[c].size();
        for (const auto& row : cells) w[c] = std::max(w[c], widest(row[c]));
    }
    std::ostringstream os;
    auto rule = [&] {
        for (std::size_t c = 0; c < w.size(); ++c) os << (c ? "-+-" : "") << std::string(w[c], '-');
        os << '\n';
    };
    for (std::size_t c = 0; c < head.size(); ++c) os << (c ? " | " : "") << pad(head[c], w[c]);
    os << '\n';
    rule();
    for (const auto& row : cells) {
        std::size_t height = 0;
        for (const auto& cell : row) height = std::max(height, cell.size());
        for (std::size_t line = 0; line < height; ++line) {
            std::string text;
            for (std::size_t c = 0; c < row.size(); ++c) {
                text += (c ? " | " : "") + pad(line < row[c].size() ? row[c][line] : "", w[c]);
            }
            text.erase(text.find_last_not_of(' ') + 1);
            os << text << '\n';
        }
        rule();
    }
    return os.str();
}

std::string dot(const std::vector<Representation>& nodes,
                const std::vector<std::pair<Representation, Representation>>& edges) {
    std::map<Representation, std::size_t> id;
    std::ostringstream os;
    os << "digraph degenerations {\n  rankdir=TB;\n";
    for (const auto& r : nodes) {
        const std::size_t k = id.size();
        id.emplace(r, k);
        os << "  n" << k << " [label=\"" << r.str() << "\"];\n";
    }
    for (const auto& [a, b] : edges) {
        auto ia = id.find(a);
        auto ib = id.find(b);
        if (ia == id.end() || ib == id.end()) continue;
        os << "  n" << ia->second << " -> n" << ib->second << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace sympdeg::render
