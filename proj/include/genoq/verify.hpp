#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genoq::verify {

struct CheckRow {
    std::string name;
    bool passed = false;
    std::string detail;  // worst error or case count
};

enum class Fault {
    None,
    QftSignFlip,  // runs a phase-negated QFT variant so the DFT oracle trips
};

struct Options {
    std::uint64_t seed = 20240811;
    // empty = every suite; names: qft, dct, bwt, partition, gradient, transport
    std::vector<std::string> only;
    Fault fault = Fault::None;
};

std::vector<CheckRow> run_suites(const Options& options);

std::string render_table(const std::vector<CheckRow>& rows);

}  // namespace genoq::verify
