#pragma once

#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace hecke::cli {

using Doc = nlohmann::ordered_json;

enum class Format { Text, Md, Csv, Json };

// Scalars print as key/value pairs; arrays of objects print as tables.
class Report {
public:
    explicit Report(int precision) : precision_(precision) {}

    void emit(const Doc& doc, Format format, std::ostream& out) const {
        switch (format) {
            case Format::Json: out << doc.dump(2) << '\n'; return;
            case Format::Csv: emit_csv(doc, out); return;
            case Format::Md: emit_md(doc, out); return;
            case Format::Text: emit_text(doc, out); return;
        }
    }

private:
    std::string scalar(const Doc& v) const {
        if (v.is_null()) return "";
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_number()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", precision_, v.get<double>());
            return buf;
        }
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
            return s;
        }
        return v.dump();
    }

    static bool is_table(const Doc& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

    static Doc columns(const Doc& rows) {
        Doc cols = Doc::array();
        for (const auto& [k, _] : rows.front().items()) cols.push_back(k);
        return cols;
    }

    void emit_text(const Doc& doc, std::ostream& out) const {
        if (doc.contains("summary")) out << doc["summary"].get<std::string>() << '\n';
        for (const auto& [k, v] : doc.items()) {
            if (k == "summary" || is_table(v)) continue;
            out << k << ": " << scalar(v) << '\n';
        }
        for (const auto& [k, v] : doc.items()) {
            if (!is_table(v)) continue;
            const auto cols = columns(v);
            for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "  " : "") << cols[i].get<std::string>();
            out << '\n';
            for (const auto& row : v) {
                for (std::size_t i = 0; i < cols.size(); ++i)
                    out << (i ? "  " : "") << scalar(row[cols[i].get<std::string>()]);
                out << '\n';
            }
        }
    }

    void emit_md(const Doc& doc, std::ostream& out) const {
        if (doc.contains("summary")) out << "**" << doc["summary"].get<std::string>() << "**\n\n";
        for (const auto& [k, v] : doc.items()) {
            if (k == "summary" || is_table(v)) continue;
            out << "- " << k << ": " << scalar(v) << '\n';
        }
        for (const auto& [k, v] : doc.items()) {
            if (!is_table(v)) continue;
            const auto cols = columns(v);
            out << "\n|";
            for (const auto& c : cols) out << ' ' << c.get<std::string>() << " |";
            out << "\n|";
            for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
            out << '\n';
            for (const auto& row : v) {
                out << '|';
                for (const auto& c : cols) out << ' ' << scalar(row[c.get<std::string>()]) << " |";
                out << '\n';
            }
        }
    }

    void emit_csv(const Doc& doc, std::ostream& out) const {
        for (const auto& [k, v] : doc.items()) {
            if (!is_table(v)) continue;
            const auto cols = columns(v);
            for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].get<std::string>();
            out << '\n';
            for (const auto& row : v) {
                for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << scalar(row[cols[i].get<std::string>()]);
                out << '\n';
            }
            return;
        }
        bool first = true;
        for (const auto& [k, v] : doc.items()) {
            out << (first ? "" : ",") << k;
            first = false;
        }
        out << '\n';
        first = true;
        for (const auto& [k, v] : doc.items()) {
            out << (first ? "" : ",") << scalar(v);
            first = false;
        }
        out << '\n';
    }

    int precision_;
};

}  // namespace hecke::cli
