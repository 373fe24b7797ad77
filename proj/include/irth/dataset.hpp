#pragma once

#include "irth/record.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace irth {

class DatasetError : public std::runtime_error {
public:
    explicit DatasetError(const std::string& what) : std::runtime_error(what) {}
};

/// One newline-delimited record. A line carries a question, a gold record,
/// a raw prediction, or any combination; absent pieces stay empty.
struct DatasetEntry {
    std::string case_id;
    std::string question;
    std::optional<SolutionRecord> gold;
    std::optional<std::string> prediction;   // raw model output, unrepaired
};

struct LineError {
    size_t line = 0;   // 1-based
    std::string message;
};

struct Dataset {
    std::vector<DatasetEntry> entries;
    std::vector<LineError> errors;
};

/// Loads a newline-delimited JSON file. Malformed lines are collected, not
/// fatal; an unreadable file or a file with zero valid entries throws.
/// Recognised keys: case_id/id, question/text, answer/gold (nested record),
/// prediction/output/response (string or nested object).
Dataset load_dataset(const std::string& path);
Dataset load_dataset(std::istream& in, const std::string& origin);

/// Serialization of the per-line record shapes written by the commands.
std::string entry_to_line(const DatasetEntry& e);

}  // namespace irth
