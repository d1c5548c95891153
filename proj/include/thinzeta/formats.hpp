#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinzeta {

/// Deterministic serialization helpers: stable key order, floats at 17
/// significant digits so every emitted value parses back bit-exactly.
std::string format_double(double v);

/// Minimal JSON object writer with insertion-ordered keys.
class JsonWriter {
public:
    JsonWriter& field(const std::string& key, const std::string& raw_value);
    JsonWriter& str(const std::string& key, const std::string& value);
    JsonWriter& num(const std::string& key, double value);
    JsonWriter& num(const std::string& key, std::uint64_t value);
    JsonWriter& num(const std::string& key, std::int64_t value);
    JsonWriter& boolean(const std::string& key, bool value);
    std::string close() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return out_; }

private:
    std::size_t width_;
    std::string out_;
};

}  // namespace thinzeta
