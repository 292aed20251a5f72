#pragma once

/*
 * Matrix input for the CLI: JSON {"n": k, "rows": [[0,1,...], ...]}, plain
 * text with one row of space-separated 0/1 per line, or the named shortcut
 * "F<k>" for the full k x k matrix. Shortcuts are accepted wherever a file
 * path is expected.
 */

#include "ckstar/zero_one_matrix.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckstar {

inline ZeroOneMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON needs fields \"n\" and \"rows\"");
    int n = j.at("n").get<int>();
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix JSON: row count differs from n");
    return ZeroOneMatrix(rows);
}

inline nlohmann::json matrix_to_json(const ZeroOneMatrix& a) {
    std::vector<std::vector<int>> rows(a.dim(), std::vector<int>(a.dim(), 0));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) rows[i][j] = a.get(i, j) ? 1 : 0;
    return nlohmann::json{{"n", a.dim()}, {"rows", rows}};
}

inline ZeroOneMatrix matrix_from_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows found");
    return ZeroOneMatrix(rows);
}

/* Resolve a CLI matrix argument: "F<k>" shortcut, else a file in JSON or
   text grid form (JSON is tried when the content starts with '{'). */
inline ZeroOneMatrix load_matrix(const std::string& spec) {
    if (spec.size() >= 2 && spec[0] == 'F') {
        bool digits = true;
        for (std::size_t i = 1; i < spec.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(spec[i]));
        if (digits) return ZeroOneMatrix::full(std::stoi(spec.substr(1)));
    }
    std::ifstream f(spec);
    if (!f) throw std::invalid_argument("cannot open matrix file: " + spec);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return matrix_from_json(nlohmann::json::parse(text));
    return matrix_from_text(text);
}

}  // namespace ckstar
