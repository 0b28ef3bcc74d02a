#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ktdom/harary.hpp"

namespace ktdom {

// Edge-list format:
//   p tds <order> <edge-count>
//   e <u> <v>          (1-based labels, u < v, ascending, one per edge)
// LF line endings, single spaces, no trailing whitespace.  Writing the same
// graph always produces identical bytes.
std::string format_edge_list(const CirculantGraph& g);
CirculantGraph parse_edge_list(std::istream& in);
CirculantGraph parse_edge_list_text(const std::string& text);

// Set-file format: one set per line, whitespace-separated 1-based labels;
// '#' starts a comment running to end of line; blank lines are skipped.
struct SetFileEntry {
    std::vector<int> labels;
    std::string comment;  // text after '#', trimmed; empty when absent
};

std::string format_set_line(const std::vector<int>& labels,
                            const std::string& trailing_comment = "");
std::vector<SetFileEntry> parse_set_file(std::istream& in);
std::vector<SetFileEntry> parse_set_file_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ktdom
