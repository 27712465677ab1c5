#pragma once

// Text file formats for colorings, residue sets, torus colorings, torus
// sets and grid functions. Parsers throw FormatError with the 1-based
// line/column of the first offending token; unreadable paths throw IoError.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/sets/residue_set.hpp"
#include "addcomb/torus/torus_coloring.hpp"
#include "addcomb/torus/torus_set.hpp"
#include "addcomb/uniformity/grid_function.hpp"

namespace addcomb::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// ambient cyclic|interval / N r / digits (r <= 35) or integers
colorings::Coloring parse_coloring(std::string_view text);
std::string format_coloring(const colorings::Coloring& c);

// m r / the r residues
sets::ResidueSet parse_residue_set(std::string_view text);
std::string format_residue_set(const sets::ResidueSet& s);

// D r / the D cell colors
torus::TorusColoring parse_torus_coloring(std::string_view text);
std::string format_torus_coloring(const torus::TorusColoring& phi);

// torus-coloring <path> / m w / s_1 ... s_r
// The path is resolved against base_dir when relative.
torus::TorusSet parse_torus_set(std::string_view text, const std::filesystem::path& base_dir);
std::string format_torus_set(const torus::TorusSet& A, std::string_view coloring_ref);

// N / N values, either all rationals (p or p/q) or decimals.
uniformity::GridFunction parse_grid_function(std::string_view text);
std::string format_grid_function(const uniformity::GridFunction& f);

colorings::Coloring load_coloring(const std::filesystem::path& path);
sets::ResidueSet load_residue_set(const std::filesystem::path& path);
torus::TorusColoring load_torus_coloring(const std::filesystem::path& path);
torus::TorusSet load_torus_set(const std::filesystem::path& path);
uniformity::GridFunction load_grid_function(const std::filesystem::path& path);

}  // namespace addcomb::cli
