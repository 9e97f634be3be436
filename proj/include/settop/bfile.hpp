#pragma once

#include "settop/smith.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace settop {

/// OEIS b-file: `index value` lines, '#' comments and blank lines ignored.
struct BFile {
    std::string id;  // e.g. "A051026"; empty when unknown
    std::vector<std::pair<long long, Integer>> entries;  // strictly increasing index
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

BFile parse_bfile(std::istream& in, std::string id = {});
/// Reads `path`; the id is taken from a bNNNNNN.txt file name when present.
BFile read_bfile(const std::string& path);

} // namespace settop
