#include "doctest.h"

#include "json.hpp"
#include "settop/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using settop::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SETTOP_TEST_DATA) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line)
            return true;
    return false;
}

nlohmann::json as_json(const Result& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("table") {
    auto p = call({"table", "--family", "primitive", "--n", "17"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("n,k,count\n", 0) == 0);
    CHECK(has_line(p.out, "17,9,10"));
    CHECK(has_line(p.out, "13,7,6"));
    CHECK(has_line(call({"table", "--family", "coprime", "--n", "17"}).out, "17,8,8"));
    CHECK(has_line(call({"table", "--family", "productfree", "--n", "12"}).out, "12,9,1"));

    auto j = as_json(call({"table", "--family", "primitive", "--n", "4", "--format", "json"}));
    CHECK(j["command"] == "table");
    CHECK(j["counts"]["4"] == nlohmann::json::array({1, 4, 2, 0, 0}));

    auto t = call({"table", "--family", "primitive", "--n", "3", "--format", "tsv"});
    CHECK(has_line(t.out, "3\t2\t1"));
}

TEST_CASE("table guard and usage errors") {
    CHECK(call({"table", "--family", "primitive", "--n", "30"}).code == 2);
    CHECK(call({"table", "--family", "bogus", "--n", "3"}).code == 2);
    CHECK(call({"table", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    auto over = call({"table", "--n", "3", "--guard-override", "70"});
    CHECK(over.code == 2);
    auto warned = call({"table", "--n", "3", "--guard-override", "12"});
    CHECK(warned.code == 0);
    CHECK(warned.err.find("warning") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("altsum") {
    auto p = call({"altsum", "--family", "primitive", "--n-from", "2", "--n-to", "17"});
    CHECK(p.code == 0);
    for (int n = 2; n <= 17; ++n)
        CHECK(has_line(p.out, std::to_string(n) + ",-1,-1,pass"));
    auto s = call({"altsum", "--family", "smultiple", "--s", "3", "--n-from", "6", "--n-to", "6"});
    CHECK(s.code == 0);
    CHECK(has_line(s.out, "6,-6,-6,pass"));
    auto r = call({"altsum", "--family", "productfree", "--n-from", "2", "--n-to", "12"});
    CHECK(r.code == 0);
    for (int n = 2; n <= 12; ++n)
        CHECK(has_line(r.out, std::to_string(n) + ",0,0,pass"));
    auto cf = call({"altsum", "--family", "coprimefree", "--n-from", "2", "--n-to", "8"});
    CHECK(cf.code == 0);
    CHECK(has_line(cf.out, "# threshold=n/a"));
    CHECK(call({"altsum", "--family", "primitive", "--n-from", "5", "--n-to", "3"}).code == 2);

    auto pp = call({"altsum", "--family", "pairproducts", "--n-from", "2", "--n-to", "14"});
    CHECK(pp.out.find("# threshold=") != std::string::npos);
}

TEST_CASE("homology") {
    auto cf = as_json(call({"homology", "--family", "coprimefree", "--n", "20", "--dmax", "2",
                            "--format", "json"}));
    CHECK(cf["rows"][0]["rank"] == 5);
    auto sm = as_json(call({"homology", "--family", "smultiple", "--s", "2", "--n", "6",
                            "--format", "json"}));
    CHECK(sm["rows"][1]["rank"] == 4);
    auto small = as_json(call({"homology", "--family", "coprimefree", "--n", "3", "--format", "json"}));
    CHECK(small["rows"][0]["rank"] == 2);
    auto raw = as_json(call({"homology", "--family", "primitive", "--n", "8", "--no-collapse",
                             "--format", "json"}));
    CHECK(raw["parameters"]["collapse"] == false);
    CHECK(raw["rows"][0]["rank"] == 1);
    CHECK(call({"homology", "--family", "primitive", "--n", "40"}).code == 2);
}

TEST_CASE("scan-h2") {
    auto full = call({"scan-h2", "--n-from", "1", "--n-to", "143"});
    CHECK(full.code == 0);
    CHECK(has_line(full.out, "143,1,,Z"));
    CHECK(has_line(full.out, "# first_nontrivial=143"));
    for (int n = 1; n <= 142; ++n)
        CHECK(has_line(full.out, std::to_string(n) + ",0,,0"));
    CHECK(has_line(call({"scan-h2", "--n-from", "1", "--n-to", "142"}).out, "# first_nontrivial=none"));
    CHECK(has_line(call({"scan-h2", "--n-from", "1", "--n-to", "4"}).out, "# first_nontrivial=none"));
    CHECK(call({"scan-h2", "--n-from", "0", "--n-to", "4"}).code == 2);
}

TEST_CASE("maximal") {
    auto p = as_json(call({"maximal", "--family", "primitive", "--n", "4", "--format", "json"}));
    CHECK(p["summary"]["coatoms"] == 3);
    CHECK(p["summary"]["m"] == 2);
    auto cf = as_json(call({"maximal", "--family", "coprimefree", "--n", "10", "--format", "json"}));
    CHECK(cf["summary"]["status"] == "failure");
    CHECK(cf["summary"]["witness"] == nlohmann::json::array({"{3,6,9}", "{5,10}"}));
    auto q = as_json(call({"maximal", "--family", "coprime", "--n", "6", "--format", "json"}));
    CHECK(q["summary"]["m"] == 1);
    for (const auto& row : q["rows"])
        CHECK(row["set"].get<std::string>().rfind("1 ", 0) == 0);
    CHECK(call({"maximal", "--family", "primitive", "--n", "1"}).code == 2);
}

TEST_CASE("oeis-compare") {
    auto p = call({"oeis-compare", "--family", "primitive", data("b051026.txt")});
    CHECK(p.code == 0);
    CHECK(has_line(p.out, "# verdict=pass"));
    CHECK(has_line(p.out, "# compared=17"));
    CHECK(call({"oeis-compare", "--family", "coprime", "--bfile", data("b084422.txt")}).code == 0);
    CHECK(call({"oeis-compare", "--family", "productfree", data("b326489.txt")}).code == 0);
    auto j = as_json(call({"oeis-compare", "--family", "primitive", data("b051026.txt"), "--format", "json"}));
    CHECK(j["parameters"]["bfile"] == "A051026");

    auto bad = call({"oeis-compare", "--family", "primitive", data("malformed.txt")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(call({"oeis-compare", "--family", "primitive", data("mismatch.txt")}).code == 1);
    CHECK(call({"oeis-compare", "--family", "primitive", data("no_overlap.txt")}).code == 1);
    CHECK(call({"oeis-compare", "--family", "primitive", data("missing.txt")}).code == 2);
    CHECK(call({"oeis-compare", "--family", "coprime", data("b051026.txt")}).code == 1);
}

TEST_CASE("output is deterministic and --out writes a file") {
    const std::vector<std::string> args = {"maximal", "--family", "primitive", "--n", "9", "--format", "json"};
    CHECK(call(args).out == call(args).out);
    const auto path = std::filesystem::temp_directory_path() / "settop_cli_out.csv";
    auto r = call({"table", "--family", "primitive", "--n", "5", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == call({"table", "--family", "primitive", "--n", "5"}).out);
    std::filesystem::remove(path);
}
