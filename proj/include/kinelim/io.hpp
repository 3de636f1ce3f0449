#pragma once

#include <string>
#include <vector>

#include "kinelim/config.hpp"

namespace kinelim {

// Fixed numeric format of every CSV and text report.
std::string format_double(double x);

void ensure_directory(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);
// Pretty JSON, two-space indent, trailing newline. Non-finite numbers become null.
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

// Small CSV builder; numbers go through format_double.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    void add_row(const std::vector<double>& values);
    // first column is a label
    void add_row(const std::string& label, const std::vector<double>& values);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
};

// Snapshot container: magic "KLSNAP01", u64 record count, u64 record length,
// then per record an f64 time followed by the values, all little endian.
struct SnapshotRecord {
    double t = 0.0;
    std::vector<double> values;
};

void write_snapshot_file(const std::string& path, const std::vector<SnapshotRecord>& records);
std::vector<SnapshotRecord> read_snapshot_file(const std::string& path);

}  // namespace kinelim
