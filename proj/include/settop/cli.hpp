#pragma once

#include "settop/families.hpp"
#include "settop/output.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace settop::cli {

/// Exit codes shared by every command.
enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

struct CommandContext {
    Format format = Format::Csv;
    int guard = default_enumeration_guard;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

/// Expected alternating sum of F_{n,k} for the kind at n, when a closed value is
/// known; nullopt otherwise (coprime-free, or n = 1).
std::optional<long long> expected_alt_sum(FamilyKind kind, int n);

struct ScanEntry {
    int n = 0;
    std::string group;  // H~_2 as text
    std::size_t rank = 0;
    std::vector<std::string> torsion;
};

/// H~_2 of the collapsed coprime-free complex for each n in [n_from, n_to].
std::vector<ScanEntry> scan_second_homology(int n_from, int n_to);

int cmd_table(FamilyKind kind, int n_max, const CommandContext& ctx);
int cmd_altsum(FamilyKind kind, int n_from, int n_to, const CommandContext& ctx);
int cmd_homology(FamilyKind kind, int n, int d_max, bool collapse, const CommandContext& ctx);
int cmd_scan_h2(int n_from, int n_to, const CommandContext& ctx);
int cmd_maximal(FamilyKind kind, int n, const CommandContext& ctx);
int cmd_oeis_compare(FamilyKind kind, const std::string& bfile_path, const CommandContext& ctx);

/// Full command line front end. Writes to `out`/`err` unless --out redirects.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace settop::cli
