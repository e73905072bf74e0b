#ifndef CDC_CODEFILE_HPP
#define CDC_CODEFILE_HPP

#include <string>
#include <vector>

#include "cdc/subspace_code.hpp"

namespace cdc {

/// Text interchange format for constant dimension codes:
///
///   cdc <q> <v> <k> <d> <count>
///
///   <k lines of v digits>      (one block per codeword, RREF, preceded by a
///                               blank line; blocks in sorted canonical order)
///   ...
///   # provenance line          (optional trailing comments)
///
/// d = 0 encodes "no distance claim". parse/serialize round-trips are
/// byte-identical on canonical input. Reading transparently handles
/// gzip-compressed files (.cdc.gz).

std::string serialize_code(const Cdc& c);

/// Throws Error(Parse) with 1-based line numbers on malformed input. Appends
/// human-readable warnings (e.g. duplicate codewords) to `warnings`.
Cdc parse_code(const std::string& text, std::vector<std::string>* warnings = nullptr);

Cdc read_code_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_code_file(const Cdc& c, const std::string& path);

/// Square matrix from a plain text file: one row of digits per line; blank
/// lines and '#' comments are ignored.
FqMatrix read_matrix_file(const std::string& path, const Field& f);

}  // namespace cdc

#endif
