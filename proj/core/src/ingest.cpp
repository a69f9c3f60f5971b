#include "bruns/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "bruns/errors.hpp"

namespace bruns {
namespace {

constexpr std::string_view kHeader = "name,role,avg,rate";

// Splits one CSV line into fields. Fields may be double-quoted; inside
// quotes a doubled quote escapes itself. Returns nullopt on unbalanced
// quoting.
std::optional<std::vector<std::string>> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (in_quotes) return std::nullopt;
    fields.push_back(std::move(field));
    return fields;
}

std::optional<double> parse_decimal(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool needs_quoting(std::string_view name) {
    return name.find_first_of(",\"") != std::string_view::npos ||
           (!name.empty() && (name.front() == ' ' || name.back() == ' '));
}

} // namespace

PlayerFile parse_players(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) {
        throw EmptyFile("player file has no content");
    }
    if (strip_cr(line) != kHeader) {
        throw MissingHeader("expected header '" + std::string(kHeader) + "'");
    }

    PlayerFile file;
    int line_number = 1;
    while (std::getline(source, line)) {
        ++line_number;
        line = strip_cr(line);
        auto warn = [&](std::string message) {
            file.warnings.push_back({line_number, std::move(message)});
        };

        if (line.empty()) {
            warn("empty line");
            continue;
        }
        const auto fields = split_csv(line);
        if (!fields) {
            warn("unbalanced quotes");
            continue;
        }
        if (fields->size() != 4) {
            warn("expected 4 fields, got " + std::to_string(fields->size()));
            continue;
        }

        PlayerRecord record;
        record.name = (*fields)[0];
        if (record.name.empty()) {
            warn("name must not be empty");
            continue;
        }

        const std::string role = lowercase((*fields)[1]);
        if (role == "batsman") {
            record.role = Role::Batsman;
        } else if (role == "bowler") {
            record.role = Role::Bowler;
        } else {
            warn("role must be batsman or bowler, got '" + (*fields)[1] + "'");
            continue;
        }

        const auto avg = parse_decimal((*fields)[2]);
        if (!avg) {
            warn("avg is not a decimal: '" + (*fields)[2] + "'");
            continue;
        }
        if (!(*avg > 0.0)) {
            warn("avg must be positive");
            continue;
        }
        record.avg = *avg;

        const auto rate = parse_decimal((*fields)[3]);
        if (!rate) {
            warn("rate is not a decimal: '" + (*fields)[3] + "'");
            continue;
        }
        if (!(*rate > 0.0)) {
            warn("rate must be positive");
            continue;
        }
        record.rate = *rate;

        file.records.push_back(std::move(record));
    }
    return file;
}

PlayerFile load_players(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream.is_open()) {
        throw Error("cannot open player file: " + path.string());
    }
    return parse_players(stream);
}

std::string serialize_players(std::span<const PlayerRecord> records) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const PlayerRecord& record : records) {
        if (needs_quoting(record.name)) {
            out << '"';
            for (const char c : record.name) {
                if (c == '"') out << '"';
                out << c;
            }
            out << '"';
        } else {
            out << record.name;
        }
        out << ',' << to_string(record.role) << ',' << format_double(record.avg) << ','
            << format_double(record.rate) << '\n';
    }
    return out.str();
}

} // namespace bruns
