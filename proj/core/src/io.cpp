#include "bfoqap/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

namespace bfoqap {

namespace {

constexpr int kMaxInstanceSize = 4096;  // parser sanity bound, not a solver limit
constexpr int kMaxObjectives = 64;

struct Token {
    std::string_view text;
    std::size_t offset;
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Whitespace-separated tokens with byte offsets.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        if (i >= text.size()) break;
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        tokens.push_back(Token{text.substr(start, i - start), start});
    }
    return tokens;
}

// Like tokenize, but whole lines whose first token does not look numeric
// are skipped (header/comment lines in multiobjective files).
std::vector<Token> tokenize_numeric_lines(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view line = text.substr(line_start, line_end - line_start);
        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i < line.size()) {
            const char c = line[i];
            if (c == '-' || c == '+' || (c >= '0' && c <= '9')) {
                for (const Token& t : tokenize(line)) {
                    tokens.push_back(Token{t.text, line_start + t.offset});
                }
            }
        }
        line_start = line_end + 1;
    }
    return tokens;
}

class TokenStream {
public:
    TokenStream(std::vector<Token> tokens, std::size_t end_offset)
        : tokens_(std::move(tokens)), end_offset_(end_offset) {}

    const Token& next(const char* what) {
        if (pos_ >= tokens_.size()) {
            throw ParseError(std::string("unexpected end of input while reading ") + what,
                             end_offset_);
        }
        return tokens_[pos_++];
    }

    Cost next_int(const char* what) {
        const Token& token = next(what);
        Cost value = 0;
        const char* begin = token.text.data();
        const char* end = begin + token.text.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError(std::string("integer out of range while reading ") + what,
                             token.offset);
        }
        if (ec != std::errc{} || ptr != end) {
            throw ParseError(std::string("expected integer for ") + what + ", got '" +
                                 std::string(token.text) + "'",
                             token.offset);
        }
        last_offset_ = token.offset;
        return value;
    }

    Cost next_non_negative(const char* what) {
        const Cost value = next_int(what);
        if (value < 0) {
            throw ParseError(std::string("negative entry for ") + what, last_offset_);
        }
        return value;
    }

    void expect_exhausted() const {
        if (pos_ < tokens_.size()) {
            throw ParseError("unexpected trailing token '" +
                                 std::string(tokens_[pos_].text) + "'",
                             tokens_[pos_].offset);
        }
    }

    std::size_t last_offset() const { return last_offset_; }

private:
    std::vector<Token> tokens_;
    std::size_t end_offset_;
    std::size_t pos_ = 0;
    std::size_t last_offset_ = 0;
};

int read_size(TokenStream& stream, const char* what) {
    const Cost n = stream.next_int(what);
    if (n < 2) {
        throw ParseError(std::string(what) + " must be at least 2", stream.last_offset());
    }
    if (n > kMaxInstanceSize) {
        throw ParseError(std::string(what) + " is implausibly large", stream.last_offset());
    }
    return static_cast<int>(n);
}

SquareMatrix read_matrix(TokenStream& stream, int n, const char* what) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = stream.next_non_negative(what);
        }
    }
    return m;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t byte_offset)
    : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

QapInstance parse_qaplib(std::string_view text) {
    TokenStream stream(tokenize(text), text.size());
    const int n = read_size(stream, "instance size");
    SquareMatrix flow = read_matrix(stream, n, "flow entry");
    SquareMatrix distance = read_matrix(stream, n, "distance entry");
    stream.expect_exhausted();
    return QapInstance(std::move(flow), std::move(distance));
}

MqapInstance parse_mqap(std::string_view text) {
    TokenStream stream(tokenize_numeric_lines(text), text.size());
    const int n = read_size(stream, "instance size");
    const Cost m_raw = stream.next_int("objective count");
    if (m_raw < 2) {
        throw ParseError("objective count must be at least 2", stream.last_offset());
    }
    if (m_raw > kMaxObjectives) {
        throw ParseError("objective count is implausibly large", stream.last_offset());
    }
    const int m = static_cast<int>(m_raw);
    SquareMatrix distance = read_matrix(stream, n, "distance entry");
    std::vector<SquareMatrix> flows;
    flows.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        flows.push_back(read_matrix(stream, n, "flow entry"));
    }
    stream.expect_exhausted();
    return MqapInstance(std::move(flows), std::move(distance));
}

SolutionFile parse_sln(std::string_view text) {
    TokenStream stream(tokenize(text), text.size());
    const Cost n_raw = stream.next_int("solution size");
    if (n_raw < 1 || n_raw > kMaxInstanceSize) {
        throw ParseError("solution size out of range", stream.last_offset());
    }
    const int n = static_cast<int>(n_raw);
    const Cost value = stream.next_int("objective value");
    std::vector<int> mapping;
    mapping.reserve(static_cast<std::size_t>(n));
    std::size_t first_entry_offset = 0;
    for (int i = 0; i < n; ++i) {
        const Cost entry = stream.next_int("assignment entry");
        if (i == 0) first_entry_offset = stream.last_offset();
        if (entry < 1 || entry > n) {
            throw ParseError("assignment entry out of 1-based range", stream.last_offset());
        }
        mapping.push_back(static_cast<int>(entry - 1));
    }
    stream.expect_exhausted();
    try {
        return SolutionFile{value, Permutation(std::move(mapping))};
    } catch (const std::invalid_argument&) {
        throw ParseError("assignment is not a permutation", first_entry_offset);
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

LoadedInstance load_instance_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::string qap_error;
    try {
        return LoadedInstance{InstanceKind::qap, parse_qaplib(text)};
    } catch (const ParseError& e) {
        qap_error = e.what();
    }
    try {
        return LoadedInstance{InstanceKind::mqap, parse_mqap(text)};
    } catch (const ParseError& e) {
        throw ParseError("file matches neither instance format (single-objective: " +
                             qap_error + "; multiobjective: " + std::string(e.what()) + ")",
                         e.byte_offset());
    }
}

std::string front_to_string(std::vector<FrontPoint> members) {
    std::sort(members.begin(), members.end(), [](const FrontPoint& a, const FrontPoint& b) {
        if (a.objectives != b.objectives) return a.objectives < b.objectives;
        return a.assignment.mapping() < b.assignment.mapping();
    });
    std::string out;
    for (const FrontPoint& member : members) {
        std::string line;
        for (Cost v : member.objectives) {
            if (!line.empty()) line += ' ';
            line += std::to_string(v);
        }
        for (int v : member.assignment.mapping()) {
            line += ' ';
            line += std::to_string(v);
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<FrontPoint> parse_front(std::string_view text, int objective_count) {
    if (objective_count < 1) {
        throw std::invalid_argument("parse_front: objective_count must be positive");
    }
    std::vector<FrontPoint> points;
    int expected_size = -1;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view line = text.substr(line_start, line_end - line_start);
        std::vector<Token> raw = tokenize(line);
        if (!raw.empty()) {
            for (Token& t : raw) t.offset += line_start;
            TokenStream stream(std::move(raw), line_end);
            ObjectiveVector values;
            values.reserve(static_cast<std::size_t>(objective_count));
            for (int k = 0; k < objective_count; ++k) {
                values.push_back(stream.next_int("objective value"));
            }
            const int entries = static_cast<int>(tokenize(line).size()) - objective_count;
            if (entries < 1) {
                throw ParseError("front line has no assignment entries", line_start);
            }
            if (expected_size == -1) expected_size = entries;
            if (entries != expected_size) {
                throw ParseError("front lines disagree on assignment length", line_start);
            }
            std::vector<int> mapping;
            mapping.reserve(static_cast<std::size_t>(entries));
            std::size_t first_entry_offset = 0;
            for (int i = 0; i < entries; ++i) {
                const Cost v = stream.next_int("assignment entry");
                if (i == 0) first_entry_offset = stream.last_offset();
                if (v < 0 || v >= entries) {
                    throw ParseError("assignment entry out of 0-based range",
                                     stream.last_offset());
                }
                mapping.push_back(static_cast<int>(v));
            }
            stream.expect_exhausted();
            try {
                points.push_back(FrontPoint{std::move(values), Permutation(std::move(mapping))});
            } catch (const std::invalid_argument&) {
                throw ParseError("assignment is not a permutation", first_entry_offset);
            }
        }
        line_start = line_end + 1;
    }
    return points;
}

std::string csv_header() { return "instance,run,seed,best_cost,evals,wall_ms\n"; }

std::string csv_row(std::string_view instance, int run, std::uint64_t seed,
                    std::string_view best_cost, long long evals, double wall_ms) {
    if (instance.find(',') != std::string_view::npos ||
        instance.find('\n') != std::string_view::npos) {
        throw std::invalid_argument("csv_row: instance name contains CSV delimiters");
    }
    char wall[64];
    const auto [ptr, ec] =
        std::to_chars(wall, wall + sizeof(wall), wall_ms, std::chars_format::fixed, 3);
    if (ec != std::errc{}) {
        throw std::invalid_argument("csv_row: cannot format wall_ms");
    }
    std::string out;
    out += instance;
    out += ',';
    out += std::to_string(run);
    out += ',';
    out += std::to_string(seed);
    out += ',';
    out += best_cost;
    out += ',';
    out += std::to_string(evals);
    out += ',';
    out.append(wall, static_cast<std::size_t>(ptr - wall));
    out += '\n';
    return out;
}

std::string format_double(double value, int significant_digits) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                         std::chars_format::general, significant_digits);
    if (ec != std::errc{}) {
        throw std::invalid_argument("format_double: cannot format value");
    }
    return std::string(buf, static_cast<std::size_t>(ptr - buf));
}

}  // namespace bfoqap
