#pragma once

#include <string>

#include "cleancomm/script.hpp"
#include "cleancomm/truth_table.hpp"

namespace cleancomm {

/// Canonical script document:
/// {"name": str, "n": int, "answer_mode": "register"|"phase"|"none",
///  "registers": [{"name","width","kind","owner"}],
///  "steps": [{"op":"gate","party":"A","gate":"CZ","targets":["A.1","C.1"]}
///            | {"op":"send","from":"A","to":"B","regs":["C"]}]}
/// PHASE gates carry an extra "theta" field. Deserialization validates the
/// layout and locality invariants and rejects malformed documents.
std::string serialize_script(const ProtocolScript& script);
ProtocolScript deserialize_script(const std::string& document);

/// Truth-table document: {"n": int, "rows": ["0110", ...]} with 2^n strings
/// of length 2^n; row index is x, read big-endian.
std::string serialize_truth_table(const TruthTable& f);
TruthTable deserialize_truth_table(const std::string& document);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cleancomm
