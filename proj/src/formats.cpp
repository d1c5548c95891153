#include "thinzeta/formats.hpp"

#include <cmath>
#include <cstdio>

#include "thinzeta/errors.hpp"

namespace thinzeta {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

JsonWriter& JsonWriter::field(const std::string& key, const std::string& raw_value) {
    fields_.emplace_back(key, raw_value);
    return *this;
}

JsonWriter& JsonWriter::str(const std::string& key, const std::string& value) {
    return field(key, escape(value));
}

JsonWriter& JsonWriter::num(const std::string& key, double value) {
    return field(key, format_double(value));
}

JsonWriter& JsonWriter::num(const std::string& key, std::uint64_t value) {
    return field(key, std::to_string(value));
}

JsonWriter& JsonWriter::num(const std::string& key, std::int64_t value) {
    return field(key, std::to_string(value));
}

JsonWriter& JsonWriter::boolean(const std::string& key, bool value) {
    return field(key, value ? "true" : "false");
}

std::string JsonWriter::close() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ",";
        out += escape(fields_[i].first) + ":" + fields_[i].second;
    }
    out += "}";
    return out;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw DomainError("CsvWriter: row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ += ',';
        out_ += cells[i];
    }
    out_ += '\n';
}

}  // namespace thinzeta
