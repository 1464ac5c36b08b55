#ifndef BST_RENDER_HPP
#define BST_RENDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "bst/corenum.hpp"
#include "bst/polynomial.hpp"

namespace bst {

enum class OutputFormat { pretty, csv, json };

std::optional<OutputFormat> parse_format(const std::string& name);

enum class TableKind { a, b, tandem, ainv, cycle, partition };

std::optional<TableKind> parse_table_kind(const std::string& name);

struct SweepConfig {
    long max_n = 12;
    long max_k = -1;     // -1: follow max_n
    long min_index = -8; // tandem window
    long max_index = 7;
    long primes_to = 31;
    long truncation = 3;
    OutputFormat format = OutputFormat::pretty;
    std::string out_path;  // empty: stdout
};

// One emitted grid cell; absent value marks a structural void (rendered
// blank in pretty output, explicit 0 in csv/json).
struct TableGrid {
    std::string kind;
    std::vector<long> row_labels;
    std::vector<long> col_labels;
    std::vector<std::vector<std::optional<Int>>> cells;
};

TableGrid make_table(TableKind kind, const SweepConfig& cfg);

std::string render_table(const TableGrid& grid, OutputFormat format);

// Inverse of the csv/json emitters, for round-trip checks. Voids come
// back as explicit zeros.
TableGrid parse_table_csv(const std::string& text);
TableGrid parse_table_json(const std::string& text);

std::string render_polynomial(const Polynomial& p, OutputFormat format);

}  // namespace bst

#endif
