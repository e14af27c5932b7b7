#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "judgecal/errors.hpp"

namespace judgecal {

using json = nlohmann::json;

/// Calls `fn(line_number, parsed)` for every non-blank line. Line numbers
/// are 1-based. Parse failures raise MalformedRecord with the line number.
inline void for_each_jsonl(const std::filesystem::path& path,
                           const std::function<void(std::size_t, const json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw MalformedRecord(line_no, "invalid JSON");
        fn(line_no, j);
    }
}

inline std::vector<json> read_jsonl(const std::filesystem::path& path) {
    std::vector<json> out;
    for_each_jsonl(path, [&](std::size_t, const json& j) { out.push_back(j); });
    return out;
}

/// Append-style JSONL writer with stable output: one compact line per record,
/// keys sorted by nlohmann's object ordering.
class JsonlWriter {
public:
    explicit JsonlWriter(const std::filesystem::path& path)
        : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw IoError("cannot write " + path.string());
    }

    void write(const json& j) {
        out_ << j.dump() << '\n';
        ++count_;
    }

    std::size_t count() const { return count_; }

    void flush() { out_.flush(); }

private:
    std::ofstream out_;
    std::size_t count_ = 0;
};

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
}

}  // namespace judgecal
