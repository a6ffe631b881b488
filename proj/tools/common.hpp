#pragma once

// Shared plumbing for the CLI: input parsing, timing, medians, and the
// synthetic data dispatch.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmeans1d/synthetic.hpp"

namespace cli {

// I/O failures map to exit code 2, validation failures to exit code 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedInput {
    std::vector<double> values;
    std::vector<double> weights;  // empty unless the weight column was requested
};

inline ParsedInput read_text_input(const std::string& path, bool with_weights) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open input file: " + path);
    }
    ParsedInput parsed;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto where = " at line " + std::to_string(line_no);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(line, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed row" + where);
        }
        parsed.values.push_back(value);
        if (with_weights) {
            if (consumed >= line.size() || line[consumed] != ',') {
                throw std::invalid_argument("missing weight column" + where);
            }
            const std::string rest = line.substr(consumed + 1);
            std::size_t weight_consumed = 0;
            double weight = 0.0;
            try {
                weight = std::stod(rest, &weight_consumed);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed weight" + where);
            }
            if (rest.find_first_not_of(" \t\r", weight_consumed) != std::string::npos) {
                throw std::invalid_argument("trailing characters" + where);
            }
            parsed.weights.push_back(weight);
        } else if (line.find_first_not_of(" \t\r", consumed) != std::string::npos &&
                   line[consumed] != ',') {
            throw std::invalid_argument("trailing characters" + where);
        }
    }
    if (parsed.values.empty()) {
        throw std::invalid_argument("empty dataset");
    }
    return parsed;
}

// Raw format: packed little-endian IEEE-754 doubles, values only.
inline ParsedInput read_raw_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open input file: " + path);
    }
    in.seekg(0, std::ios::end);
    const std::streamoff bytes = in.tellg();
    in.seekg(0, std::ios::beg);
    if (bytes <= 0 || bytes % static_cast<std::streamoff>(sizeof(double)) != 0) {
        throw std::invalid_argument("raw input must be a whole number of doubles");
    }
    ParsedInput parsed;
    parsed.values.resize(static_cast<std::size_t>(bytes) / sizeof(double));
    in.read(reinterpret_cast<char*>(parsed.values.data()), bytes);
    if (!in) {
        throw IoError("short read on input file: " + path);
    }
    return parsed;
}

inline ParsedInput read_input(const std::string& path, const std::string& format,
                              bool with_weights) {
    if (format == "raw") {
        if (with_weights) {
            throw std::invalid_argument("raw format carries values only");
        }
        return read_raw_input(path);
    }
    if (format == "csv") {
        return read_text_input(path, with_weights);
    }
    throw std::invalid_argument("unknown format: " + format);
}

inline std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

inline std::int64_t median_ns(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

inline std::vector<double> generate_dataset(const std::string& family, std::size_t n,
                                            std::uint64_t seed) {
    if (family == "uniform") {
        return kmeans1d::synthetic::uniform_values(n, seed);
    }
    if (family == "blobs") {
        return kmeans1d::synthetic::blob_values(n, 8, seed);
    }
    throw std::invalid_argument("unknown data family: " + family);
}

} // namespace cli
