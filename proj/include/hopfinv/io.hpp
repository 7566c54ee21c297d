#pragma once

#include <string>

#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"

namespace hopfinv {

/// JSON structure files.  Indices are 1-based on disk; coefficients use
/// the scalar text grammar (plain JSON integers also accepted on read).
HopfPtr load_hopf(const std::string& path);
void save_hopf(const HopfStructure& h, const std::string& path);
std::string hopf_json_text(const HopfStructure& h);

/// {order, table (row-major, 1-based), name}
FinGroup load_group(const std::string& path);
void save_group(const FinGroup& g, const std::string& path);

/// {conductor, irreps: [{name, dim, values: [...]}]}
CharTable load_char_table(const std::string& path);
void save_char_table(const CharTable& t, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// A structure argument is a file when it names one (or ends in .json),
/// otherwise a named group (prefix "dual:" and "double:" select the dual
/// of the group algebra and the Drinfeld double).
HopfPtr resolve_hopf(const std::string& arg);

/// A group argument: file path or bundled name.
FinGroup resolve_group(const std::string& arg);

}  // namespace hopfinv
