#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bfoqap/instance.hpp"
#include "bfoqap/pareto.hpp"
#include "bfoqap/permutation.hpp"

namespace bfoqap {

/// Parse failure carrying the byte offset of the offending token (or of
/// the unexpected end of input). The what() string names both.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t byte_offset);
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Single-objective format: size token, then the flow matrix, then the
/// distance matrix, whitespace-separated in any line layout. Strict about
/// content: non-integer tokens, negative entries, short or trailing input
/// all raise ParseError.
QapInstance parse_qaplib(std::string_view text);

/// Multiobjective format: optional header/comment lines (first token not
/// a number) are skipped, then n, m, one distance matrix, then m flow
/// matrices. Same strictness as parse_qaplib.
MqapInstance parse_mqap(std::string_view text);

/// Published solution file: size, objective value, then a 1-based
/// assignment (converted to 0-based here).
struct SolutionFile {
    Cost value;
    Permutation assignment;
};
SolutionFile parse_sln(std::string_view text);

enum class InstanceKind { qap, mqap };

struct LoadedInstance {
    InstanceKind kind;
    std::variant<QapInstance, MqapInstance> value;

    const QapInstance& qap() const { return std::get<QapInstance>(value); }
    const MqapInstance& mqap() const { return std::get<MqapInstance>(value); }
};

/// Reads a file and infers the format from its content (single-objective
/// tried first, then multiobjective), never from the file name. Throws
/// std::runtime_error when the file cannot be read and ParseError when it
/// matches neither format.
LoadedInstance load_instance_file(const std::filesystem::path&);

std::string read_text_file(const std::filesystem::path&);

/// Front file: one member per line, "obj1 ... objm loc0 ... locn-1",
/// 0-based locations, single spaces, LF endings, sorted lexicographically
/// by objective vector (assignment as tiebreak).
std::string front_to_string(std::vector<FrontPoint> members);

/// Inverse of front_to_string; the objective count cannot be inferred from
/// a line alone, so callers pass it.
std::vector<FrontPoint> parse_front(std::string_view text, int objective_count);

/// Run report CSV. The header is fixed; rows are locale-independent.
/// best_cost arrives preformatted because its meaning depends on the run
/// kind (integer cost, decimal distance, or empty).
std::string csv_header();
std::string csv_row(std::string_view instance, int run, std::uint64_t seed,
                    std::string_view best_cost, long long evals, double wall_ms);

/// Fixed-format decimal helper (to_chars-backed, locale-independent).
std::string format_double(double value, int significant_digits = 12);

}  // namespace bfoqap
