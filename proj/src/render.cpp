#include "bst/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "bst/bstriangle.hpp"
#include "bst/stirling.hpp"

namespace bst {

std::optional<OutputFormat> parse_format(const std::string& name)
{
    if (name == "pretty") return OutputFormat::pretty;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

std::optional<TableKind> parse_table_kind(const std::string& name)
{
    if (name == "a") return TableKind::a;
    if (name == "b") return TableKind::b;
    if (name == "tandem") return TableKind::tandem;
    if (name == "ainv") return TableKind::ainv;
    if (name == "cycle") return TableKind::cycle;
    if (name == "partition") return TableKind::partition;
    return std::nullopt;
}

namespace {

const char* kind_name(TableKind kind)
{
    switch (kind) {
        case TableKind::a: return "a";
        case TableKind::b: return "b";
        case TableKind::tandem: return "tandem";
        case TableKind::ainv: return "ainv";
        case TableKind::cycle: return "cycle";
        case TableKind::partition: return "partition";
    }
    return "?";
}

}  // namespace

TableGrid make_table(TableKind kind, const SweepConfig& cfg)
{
    TableGrid grid;
    grid.kind = kind_name(kind);
    const long max_k = cfg.max_k < 0 ? cfg.max_n : cfg.max_k;
    long row_lo = 0, row_hi = cfg.max_n, col_lo = 0, col_hi = max_k;
    if (kind == TableKind::b || kind == TableKind::ainv)
        row_lo = col_lo = 1;
    if (kind == TableKind::tandem) {
        row_lo = col_lo = cfg.min_index;
        row_hi = col_hi = cfg.max_index;
    }
    if (row_hi < row_lo || col_hi < col_lo)
        throw std::invalid_argument("make_table: empty index range");
    for (long n = row_lo; n <= row_hi; ++n)
        grid.row_labels.push_back(n);
    for (long k = col_lo; k <= col_hi; ++k)
        grid.col_labels.push_back(k);

    TriangleTable ainv(TriangleKind::bsFirstInverse, 1);
    if (kind == TableKind::ainv)
        ainv = inverse_first_triangle(cfg.max_n);

    for (long n : grid.row_labels) {
        std::vector<std::optional<Int>> row;
        for (long k : grid.col_labels) {
            switch (kind) {
                case TableKind::a: row.emplace_back(bs_first(n, k)); break;
                case TableKind::b: row.emplace_back(bs_second(n, k)); break;
                case TableKind::cycle: row.emplace_back(cycle_stirling(n, k)); break;
                case TableKind::partition:
                    row.emplace_back(partition_stirling(n, k));
                    break;
                case TableKind::ainv: row.emplace_back(ainv.entry(n, k)); break;
                case TableKind::tandem:
                    if (tandem_void(n, k))
                        row.emplace_back(std::nullopt);
                    else
                        row.emplace_back(tandem(n, k).value);
                    break;
            }
        }
        grid.cells.push_back(std::move(row));
    }
    return grid;
}

namespace {

std::string cell_string(const std::optional<Int>& cell, bool blank_voids)
{
    if (!cell)
        return blank_voids ? "" : "0";
    return to_string(*cell);
}

std::string render_pretty(const TableGrid& grid)
{
    const std::size_t ncols = grid.col_labels.size();
    std::vector<std::size_t> width(ncols + 1, 0);
    std::vector<std::vector<std::string>> text;
    {
        std::vector<std::string> header{"n\\k"};
        for (long k : grid.col_labels)
            header.push_back(std::to_string(k));
        text.push_back(std::move(header));
    }
    for (std::size_t i = 0; i < grid.row_labels.size(); ++i) {
        std::vector<std::string> line{std::to_string(grid.row_labels[i])};
        for (const auto& cell : grid.cells[i])
            line.push_back(cell_string(cell, true));
        text.push_back(std::move(line));
    }
    for (const auto& line : text)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    std::ostringstream out;
    for (const auto& line : text) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c)
                out << "  ";
            out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const TableGrid& grid)
{
    std::ostringstream out;
    out << "n";
    for (long k : grid.col_labels)
        out << "," << k;
    out << "\n";
    for (std::size_t i = 0; i < grid.row_labels.size(); ++i) {
        out << grid.row_labels[i];
        for (const auto& cell : grid.cells[i])
            out << "," << cell_string(cell, false);
        out << "\n";
    }
    return out.str();
}

std::string render_json(const TableGrid& grid)
{
    nlohmann::json j;
    j["kind"] = grid.kind;
    j["rows"] = grid.row_labels;
    j["cols"] = grid.col_labels;
    auto cells = nlohmann::json::array();
    for (const auto& row : grid.cells) {
        auto jrow = nlohmann::json::array();
        for (const auto& cell : row)
            jrow.push_back(cell_string(cell, false));  // strings, never numbers
        cells.push_back(std::move(jrow));
    }
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_table(const TableGrid& grid, OutputFormat format)
{
    switch (format) {
        case OutputFormat::pretty: return render_pretty(grid);
        case OutputFormat::csv: return render_csv(grid);
        case OutputFormat::json: return render_json(grid);
    }
    return {};
}

TableGrid parse_table_csv(const std::string& text)
{
    TableGrid grid;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string field;
        bool first = true;
        std::vector<std::optional<Int>> row;
        while (std::getline(fields, field, ',')) {
            if (header) {
                if (!first)
                    grid.col_labels.push_back(std::stol(field));
            } else if (first) {
                grid.row_labels.push_back(std::stol(field));
            } else {
                row.emplace_back(Int(field));
            }
            first = false;
        }
        if (!header)
            grid.cells.push_back(std::move(row));
        header = false;
    }
    return grid;
}

TableGrid parse_table_json(const std::string& text)
{
    TableGrid grid;
    auto j = nlohmann::json::parse(text);
    grid.kind = j.at("kind").get<std::string>();
    grid.row_labels = j.at("rows").get<std::vector<long>>();
    grid.col_labels = j.at("cols").get<std::vector<long>>();
    for (const auto& jrow : j.at("cells")) {
        std::vector<std::optional<Int>> row;
        for (const auto& cell : jrow)
            row.emplace_back(Int(cell.get<std::string>()));
        grid.cells.push_back(std::move(row));
    }
    return grid;
}

std::string render_polynomial(const Polynomial& p, OutputFormat format)
{
    switch (format) {
        case OutputFormat::pretty:
            return to_string(p) + "\n";
        case OutputFormat::csv: {
            std::string out;
            for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
                if (i)
                    out += ",";
                out += to_string(p.coefficients()[i]);
            }
            return out + "\n";
        }
        case OutputFormat::json: {
            nlohmann::json j;
            auto coeffs = nlohmann::json::array();
            for (const auto& c : p.coefficients())
                coeffs.push_back(to_string(c));
            j["coefficients"] = std::move(coeffs);
            return j.dump(2) + "\n";
        }
    }
    return {};
}

}  // namespace bst
