#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace qgeom_cli {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (c.is_null()) return "";
    if (c.is_string()) return c.get<std::string>();
    if (c.is_number_float()) return format_number(c.get<double>());
    return c.dump();
}

} // namespace

std::string render_csv(const Report& r) {
    std::string out;
    for (const auto& [key, value] : r.meta) {
        out += "# ";
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out += ',';
        out += r.columns[i];
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.meta) meta[key] = value;

    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i)
            obj[r.columns[i]] = row[i];
        data.push_back(std::move(obj));
    }

    nlohmann::ordered_json top = nlohmann::ordered_json::object();
    top["meta"] = std::move(meta);
    top["data"] = std::move(data);
    return top.dump(2) + "\n";
}

int write_report(const Report& r, const std::string& format,
                 const std::string& path) {
    const std::string text =
        format == "json" ? render_json(r) : render_csv(r);
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file: " << path << '\n';
        return 2;
    }
    file << text;
    return file ? 0 : 2;
}

} // namespace qgeom_cli
