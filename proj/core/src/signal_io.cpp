#include "projkernel/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace projkernel {

SignalIoError::SignalIoError(SignalIoErrc code, const std::string& what, std::size_t line)
    : std::runtime_error(what), code_(code), line_(line)
{
}

const char* to_string(SignalIoErrc code) noexcept
{
    switch (code) {
    case SignalIoErrc::io_failure: return "io_failure";
    case SignalIoErrc::parse_error: return "parse_error";
    case SignalIoErrc::non_uniform_grid: return "non_uniform_grid";
    case SignalIoErrc::empty_file: return "empty_file";
    case SignalIoErrc::index_gap: return "index_gap";
    }
    return "unknown";
}

namespace {

constexpr double kUniformTolerance = 1e-9;

std::string_view trim(std::string_view s) noexcept
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_field(std::string_view field, T& out) noexcept
{
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

bool looks_like_header(std::string_view line) noexcept
{
    const std::string_view t = trim(line);
    return !t.empty() && !(t.front() == '-' || t.front() == '+' || t.front() == '.' ||
                           (t.front() >= '0' && t.front() <= '9'));
}

struct Row {
    long long index;
    double x;
    double re;
    double im;
};

Row parse_row(std::string_view line, std::size_t line_no)
{
    std::string_view fields[4];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (count == 4) {
            throw SignalIoError(SignalIoErrc::parse_error, "too many fields", line_no);
        }
        fields[count++] = line.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (count != 4) {
        throw SignalIoError(SignalIoErrc::parse_error, "expected 4 fields: index,x,re,im", line_no);
    }
    Row row{};
    if (!parse_field(fields[0], row.index) || !parse_field(fields[1], row.x) ||
        !parse_field(fields[2], row.re) || !parse_field(fields[3], row.im)) {
        throw SignalIoError(SignalIoErrc::parse_error, "malformed number", line_no);
    }
    if (!std::isfinite(row.x) || !std::isfinite(row.re) || !std::isfinite(row.im)) {
        throw SignalIoError(SignalIoErrc::parse_error, "non-finite value", line_no);
    }
    return row;
}

} // namespace

SampledSignal parse_signal(std::istream& in, Domain domain)
{
    std::vector<Row> rows;
    std::vector<std::size_t> line_numbers;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (header_allowed && looks_like_header(view)) {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        rows.push_back(parse_row(view, line_no));
        line_numbers.push_back(line_no);
    }
    if (in.bad()) {
        throw SignalIoError(SignalIoErrc::io_failure, "read failed");
    }
    if (rows.empty()) {
        throw SignalIoError(SignalIoErrc::empty_file, "signal file has no samples");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].index != static_cast<long long>(i)) {
            throw SignalIoError(SignalIoErrc::index_gap,
                                "indices must run contiguously from 0", line_numbers[i]);
        }
    }
    if (rows.size() < 2) {
        throw SignalIoError(SignalIoErrc::parse_error, "a signal needs at least two samples",
                            line_numbers.front());
    }

    // The first spacing is the reference, so the error points at the first
    // row that breaks it; the endpoints give the more accurate step.
    const double reference = rows[1].x - rows[0].x;
    if (!(reference > 0.0)) {
        throw SignalIoError(SignalIoErrc::non_uniform_grid, "coordinates must increase",
                            line_numbers[1]);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double spacing = rows[i].x - rows[i - 1].x;
        if (std::abs(spacing - reference) > kUniformTolerance * reference) {
            throw SignalIoError(SignalIoErrc::non_uniform_grid,
                                "coordinate spacing deviates from uniform", line_numbers[i]);
        }
    }

    std::vector<Complex> values;
    values.reserve(rows.size());
    for (const Row& r : rows) {
        values.emplace_back(r.re, r.im);
    }
    const double step = (rows.back().x - rows.front().x) / static_cast<double>(rows.size() - 1);
    return {UniformGrid(rows.front().x, step, rows.size()), std::move(values), domain};
}

SampledSignal read_signal(const std::filesystem::path& path, Domain domain)
{
    std::ifstream in(path);
    if (!in) {
        throw SignalIoError(SignalIoErrc::io_failure, "cannot open " + path.string());
    }
    return parse_signal(in, domain);
}

void write_signal(std::ostream& out, const SampledSignal& signal)
{
    out << "index,x,re,im\n";
    char buf[160];
    for (std::size_t i = 0; i < signal.size(); ++i) {
        const Complex v = signal[i];
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i, signal.grid().point(i),
                      v.real(), v.imag());
        out << buf;
    }
}

void write_signal(const std::filesystem::path& path, const SampledSignal& signal)
{
    std::ofstream out(path);
    if (!out) {
        throw SignalIoError(SignalIoErrc::io_failure, "cannot open " + path.string() + " for writing");
    }
    write_signal(out, signal);
    if (!out) {
        throw SignalIoError(SignalIoErrc::io_failure, "write failed for " + path.string());
    }
}

} // namespace projkernel
