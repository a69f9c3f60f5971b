#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bruns/model.hpp"

namespace bruns {

struct ParseWarning {
    int line = 0; // 1-based line number in the source stream
    std::string message;
};

/// Result of parsing one player file: every data line ends up either as a
/// record or as a warning, never both and never silently dropped.
struct PlayerFile {
    std::vector<PlayerRecord> records;
    std::vector<ParseWarning> warnings;
};

/// Parses CSV with the exact header `name,role,avg,rate`.
/// Names may be double-quoted (embedded commas, "" escapes); role is
/// batsman/bowler case-insensitive; avg and rate must be positive decimals.
/// Malformed lines become warnings. Throws EmptyFile when the stream has no
/// content and MissingHeader when the first line is not the schema header.
PlayerFile parse_players(std::istream& source);

/// parse_players over a file on disk. Throws Error if the file cannot be
/// opened.
PlayerFile load_players(const std::filesystem::path& path);

/// Canonical CSV form of the records: schema header plus one line per
/// record, names quoted only when they need to be. Re-parsing the output
/// yields identical records.
std::string serialize_players(std::span<const PlayerRecord> records);

} // namespace bruns
