#pragma once

// Line-oriented structure files (UTF-8, `#` starts a comment):
//
//   ainfty v1
//   convention cochain            # or: chain
//   basis v1 0
//   basis v2 0
//   basis w 1
//   map 1: v1 -> 1 w
//   map 2: v1 v2 -> 1 v1
//   map 3: v1 w v1 -> -1 v1 + 1/2 w
//
// Words not listed map to zero. Under `convention chain` the basis degrees
// are negated on input (and restored on output), so m_k of chain degree
// k - 2 becomes the cochain degree 2 - k map the engine expects.

#include <filesystem>
#include <string>
#include <string_view>

#include "ainfty/structure.hpp"

namespace ainfty {

/// Throws ParseError (with a 1-based line number) on any malformed line,
/// unknown basis name, duplicate entry, word/arity mismatch, bad rational or
/// inhomogeneous entry.
AStructure parse_structure(std::string_view text, std::string name = "input");

/// Reads and parses a file; the structure is named after the path. I/O
/// failures are reported as ParseError at line 0.
AStructure load_structure_file(const std::filesystem::path& path);

/// Canonical text of a finite unprimed structure: basis in order, then map
/// entries by arity and word. Throws InputError for generated or primed
/// structures.
std::string serialize_structure(const AStructure& s);

}  // namespace ainfty
