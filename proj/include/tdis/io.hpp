#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tdis/error.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis {

// column order of a contact file: "t u v" (SocioPatterns) or "u v t" (SNAP)
enum class column_format { tuv, uvt };

struct parse_options {
    column_format format = column_format::tuv;
    bool directed = false;
    time_t resolution = 1; // timestamps are divided by this after shifting
};

struct parse_info {
    std::size_t n_lines = 0;
    std::size_t n_self_dropped = 0;
    std::size_t n_duplicates_dropped = 0;
    time_t t_min_raw = 0;
    std::vector<std::int64_t> node_labels; // internal index -> external id
};

namespace detail {

inline std::int64_t parse_int(std::string_view field, std::size_t line_no)
{
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error("line " + std::to_string(line_no) + ": not an integer: '" +
                          std::string(field) + "'");
    return value;
}

} // namespace detail

/* Parse a whitespace-separated contact stream. Lines starting with '#' and
 * blank lines are ignored; extra trailing columns are ignored. External node
 * ids are relabeled to 0..N-1 in ascending id order and timestamps are
 * shifted so the earliest contact is at t = 0, then divided by
 * options.resolution. */
inline temporal_network parse_contacts(std::istream& in, const parse_options& options = {},
                                       std::string label = {}, parse_info* info = nullptr)
{
    if (options.resolution < 1)
        throw std::invalid_argument("resolution must be >= 1");

    struct raw_contact {
        std::int64_t u, v, t;
    };
    std::vector<raw_contact> raw;
    std::string line;
    std::size_t line_no = 0;
    std::size_t self_dropped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string_view sv(line);
        const auto first = sv.find_first_not_of(" \t");
        if (first == std::string_view::npos || sv[first] == '#')
            continue;

        std::int64_t fields[3];
        std::size_t n_fields = 0;
        std::size_t pos = first;
        while (pos < sv.size() && n_fields < 3) {
            const auto end = sv.find_first_of(" \t", pos);
            const auto len = (end == std::string_view::npos ? sv.size() : end) - pos;
            fields[n_fields++] = detail::parse_int(sv.substr(pos, len), line_no);
            pos = sv.find_first_not_of(" \t", pos + len);
            if (pos == std::string_view::npos)
                break;
        }
        if (n_fields < 3)
            throw parse_error("line " + std::to_string(line_no) + ": expected 3 integer columns");

        raw_contact rc;
        if (options.format == column_format::tuv) {
            rc.t = fields[0];
            rc.u = fields[1];
            rc.v = fields[2];
        } else {
            rc.u = fields[0];
            rc.v = fields[1];
            rc.t = fields[2];
        }
        if (rc.u == rc.v) {
            ++self_dropped;
            continue;
        }
        raw.push_back(rc);
    }
    if (raw.empty())
        throw parse_error("no contacts in input");

    std::map<std::int64_t, node_t> id_map;
    for (const auto& rc : raw) {
        id_map.emplace(rc.u, 0);
        id_map.emplace(rc.v, 0);
    }
    node_t next = 0;
    for (auto& [id, idx] : id_map)
        idx = next++;

    std::int64_t t_min = raw.front().t;
    for (const auto& rc : raw)
        t_min = std::min(t_min, rc.t);

    std::vector<contact> contacts;
    contacts.reserve(raw.size());
    time_t horizon = 0;
    for (const auto& rc : raw) {
        contact c;
        c.u = id_map.at(rc.u);
        c.v = id_map.at(rc.v);
        c.t = (rc.t - t_min) / options.resolution;
        horizon = std::max(horizon, c.t);
        contacts.push_back(c);
    }

    const std::size_t before = contacts.size();
    auto g = make_network(next, horizon, std::move(contacts), options.directed, std::move(label));
    g.node_labels.reserve(id_map.size());
    for (const auto& [id, idx] : id_map)
        g.node_labels.push_back(id);

    if (info) {
        info->n_lines = line_no;
        info->n_self_dropped = self_dropped;
        info->n_duplicates_dropped = before - g.n_contacts();
        info->t_min_raw = t_min;
        info->node_labels = g.node_labels;
    }
    return g;
}

inline temporal_network load_contacts(const std::filesystem::path& path,
                                      const parse_options& options = {},
                                      parse_info* info = nullptr)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path.string() + "'");
    try {
        return parse_contacts(in, options, path.stem().string(), info);
    } catch (const parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

// canonical form: "t u v" per line, sorted ascending, internal 0-based ids, LF
inline void write_contacts(std::ostream& out, const temporal_network& g)
{
    for (const auto& c : g.contacts)
        out << c.t << ' ' << c.u << ' ' << c.v << '\n';
}

inline void save_contacts(const std::filesystem::path& path, const temporal_network& g)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write '" + path.string() + "'");
    write_contacts(out, g);
    if (!out)
        throw io_error("write failed: '" + path.string() + "'");
}

// deterministic float formatting for CSV output
inline std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline void write_labeled_matrix_csv(std::ostream& out, const std::vector<std::string>& labels,
                                     const std::vector<double>& values)
{
    const std::size_t k = labels.size();
    for (std::size_t i = 0; i < k; ++i)
        out << (i ? "," : "") << labels[i];
    out << '\n';
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            out << (j ? "," : "") << format_double(values[i * k + j]);
        out << '\n';
    }
}

inline std::pair<std::vector<std::string>, std::vector<double>>
read_labeled_matrix_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("matrix csv: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::vector<std::string> labels;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            labels.push_back(cell);
    }
    const std::size_t k = labels.size();
    std::vector<double> values;
    values.reserve(k * k);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        ++row;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            try {
                values.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw parse_error("matrix csv: bad number '" + cell + "'");
            }
            ++col;
        }
        if (col != k)
            throw parse_error("matrix csv: row " + std::to_string(row) + " has " +
                              std::to_string(col) + " columns, expected " + std::to_string(k));
    }
    if (row != k)
        throw parse_error("matrix csv: expected " + std::to_string(k) + " rows");
    return {std::move(labels), std::move(values)};
}

} // namespace tdis
