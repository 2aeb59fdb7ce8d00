#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "projkernel/quadrature.hpp"

// Signal files are CSV with the header `index,x,re,im` followed by one row
// per sample. Indices run contiguously from 0 and x must be uniformly spaced
// (relative deviation <= 1e-9). Reals are written with 17 significant digits,
// so a write/read cycle reproduces every finite double exactly.

namespace projkernel {

enum class SignalIoErrc {
    io_failure,
    parse_error,
    non_uniform_grid,
    empty_file,
    index_gap,
};

class SignalIoError : public std::runtime_error {
public:
    SignalIoError(SignalIoErrc code, const std::string& what, std::size_t line = 0);

    SignalIoErrc code() const noexcept { return code_; }
    /// 1-based line number of the offending row, 0 when not line-specific.
    std::size_t line() const noexcept { return line_; }

private:
    SignalIoErrc code_;
    std::size_t line_;
};

const char* to_string(SignalIoErrc code) noexcept;

SampledSignal parse_signal(std::istream& in, Domain domain);
SampledSignal read_signal(const std::filesystem::path& path, Domain domain);

void write_signal(std::ostream& out, const SampledSignal& signal);
void write_signal(const std::filesystem::path& path, const SampledSignal& signal);

} // namespace projkernel
