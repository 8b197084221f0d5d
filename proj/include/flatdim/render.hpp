#pragma once

#include <flatdim/bounds.hpp>
#include <flatdim/classify.hpp>
#include <flatdim/veneroni.hpp>

#include <string>
#include <vector>

namespace flatdim {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(const std::string& name);  // "table" | "csv" | "json"

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// All renderings are byte-deterministic for identical inputs. Big integer
// fields (adim, vdim) are emitted as strings in JSON: the scan values
// overflow the 53-bit safe range of JSON numbers.
std::string render_scan(const std::vector<ClassificationRecord>& records, OutputFormat fmt);
std::string render_record(const ClassificationRecord& rec, OutputFormat fmt);
std::string render_system(const LinearSystem& sys, OutputFormat fmt);

// Inverse of render_scan(..., Csv); throws std::invalid_argument on
// malformed input.
std::vector<ClassificationRecord> parse_scan_csv(const std::string& csv);

}  // namespace flatdim
