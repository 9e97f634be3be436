#include "settop/bfile.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace settop {

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t start = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

BFile parse_bfile(std::istream& in, std::string id) {
    BFile out;
    out.id = std::move(id);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string index_text;
        if (!(fields >> index_text))
            continue;  // blank
        if (index_text[0] == '#')
            continue;
        std::string value_text;
        std::string extra;
        if (!(fields >> value_text))
            throw BFileParseError(line_no, "expected `index value`, got '" + line + "'");
        if (fields >> extra)
            throw BFileParseError(line_no, "trailing text after value");
        if (!is_integer_token(index_text) || !is_integer_token(value_text))
            throw BFileParseError(line_no, "non-integer field in '" + line + "'");
        long long index = std::stoll(index_text);
        if (!out.entries.empty() && index <= out.entries.back().first)
            throw BFileParseError(line_no, "indices must be strictly increasing");
        if (value_text[0] == '+')
            value_text.erase(0, 1);
        out.entries.emplace_back(index, Integer(value_text));
    }
    return out;
}

BFile read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open b-file '" + path + "'");
    std::string id;
    static const std::regex name_pattern(R"(b(\d{6})\.txt)");
    std::smatch m;
    const std::string name = std::filesystem::path(path).filename().string();
    if (std::regex_match(name, m, name_pattern))
        id = "A" + m[1].str();
    return parse_bfile(in, id);
}

} // namespace settop
