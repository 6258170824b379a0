#ifndef ZLAB_SCAN_HPP
#define ZLAB_SCAN_HPP

#include <charconv>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <atomic>
#include <thread>
#include <variant>
#include <vector>

#include "core.hpp"

namespace zlab {

using scan_cell = std::variant<double, long long, std::string>;

// Shortest round-trip decimal form (17 significant digits when needed).
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_cell(const scan_cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
    return std::get<std::string>(c);
}

// Column-named table of scan rows plus the run's parameters; the CSV/JSON
// interchange record for every grid-producing subcommand.
struct ScanTable {
    std::vector<std::string> columns;
    std::vector<std::vector<scan_cell>> rows;
    std::map<std::string, std::string> meta;

    void add_row(std::vector<scan_cell> row) {
        if (row.size() != columns.size()) throw domain_error("ScanTable: row arity mismatch");
        rows.push_back(std::move(row));
    }

    // CSV: '#' meta preamble, header row, '.' decimal, LF endings.
    void write_csv(std::ostream& os) const {
        for (const auto& [k, v] : meta) os << "# " << k << " = " << v << "\n";
        for (size_t i = 0; i < columns.size(); ++i) os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                os << format_cell(row[i]) << (i + 1 < row.size() ? "," : "");
            os << "\n";
        }
    }
};

// Deterministic parallel map over [0, n): output slot i always receives task i.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace zlab

#endif
