#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "tridsign/cli.hpp"
#include "tridsign/error.hpp"
#include "tridsign/io.hpp"

using namespace tridsign;
using C = std::complex<double>;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tridsign");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch() {
    const fs::path d = fs::temp_directory_path() / ("tridsign_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("normalize") {
    auto r = cli({"normalize", "--k", "+-", "--l", "-+"});
    CHECK(r.code == 0);
    CHECK(r.out == "--\n");
    CHECK(cli({"normalize", "--k", "+", "--l", "+"}).out == "+\n");
    r = cli({"normalize", "--periodic", "--k", "+", "--l", "-"});
    CHECK(r.out == "--\nperiod doubled: 1 -> 2\n");
    r = cli({"normalize", "--k", "+x", "--l", "++"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("index 1") != std::string::npos);
    CHECK(cli({"normalize", "--k", "+", "--l", "++"}).code == kExitUsage);
}

TEST_CASE("spectrum") {
    auto r = cli({"spectrum", "--mode", "finite", "--k", "+"});
    CHECK(r.code == 0);
    auto cloud = cloud_from_csv(r.out);
    CHECK(multiset_match(cloud.points(), {1.0, -1.0}, 1e-12));
    CHECK(r.out.rfind("re,im,tag\n", 0) == 0);

    r = cli({"spectrum", "--mode", "periodic", "--k", "-", "--samples", "5"});
    cloud = cloud_from_csv(r.out);
    CHECK(cloud.size() == 10);
    for (const C& z : cloud.points()) CHECK(std::abs(z.real()) <= 1e-9);

    r = cli({"spectrum", "--k", "++"});
    CHECK(multiset_match(cloud_from_csv(r.out).points(), {0.0, std::sqrt(2.0), -std::sqrt(2.0)}, 1e-12));

    r = cli({"spectrum", "--mode", "periodic", "--max-m", "2", "--samples", "9"});
    CHECK(r.code == 0);
    CHECK(r.err.find("points: ") != std::string::npos);

    CHECK(cli({"spectrum", "--mode", "periodic", "--k", "+", "--samples", "1"}).code == kExitUsage);
    CHECK(cli({"spectrum", "--mode", "sideways", "--k", "+"}).code == kExitUsage);
    CHECK(cli({"spectrum", "--mode", "periodic"}).code == kExitUsage);
    CHECK(cli({"spectrum", "--k", "+", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("spectrum json and svg") {
    auto r = cli({"spectrum", "--k", "++", "--format", "json"});
    const Json doc = Json::parse(r.out);
    CHECK(doc["points"].size() == 3);
    CHECK(doc["params"]["k"] == "++");
    // Lexicographic key order.
    CHECK(r.out.find("\"params\"") < r.out.find("\"points\""));
    CHECK(r.out.find("\"im\"") < r.out.find("\"re\""));

    r = cli({"spectrum", "--mode", "periodic", "--k", "+-", "--samples", "7", "--format", "svg"});
    CHECK(count(r.out, "<circle") == 28);
    CHECK(r.out.find("<svg") == 0);
    CHECK(r.out.find("href") == std::string::npos);
}

TEST_CASE("enumerate") {
    auto r = cli({"enumerate", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(cloud_from_csv(r.out).size() == 4);
    CHECK(r.err.find("points: 4") != std::string::npos);
    CHECK(r.err.find("seconds: ") != std::string::npos);

    const auto one = cloud_from_csv(r.out).points();
    const auto two = cloud_from_csv(cli({"enumerate", "--n", "2", "--accumulate"}).out).points();
    CHECK(two.size() == 16);
    for (const C& z : one) CHECK(std::find(two.begin(), two.end(), z) != two.end());

    CHECK(cli({"enumerate", "--n", "17"}).code == kExitUsage);
    CHECK(cli({"--cap", "4", "enumerate", "--n", "5"}).code == kExitUsage);
    CHECK(cli({"enumerate"}).code == kExitUsage);

    const auto plain = cloud_from_csv(cli({"enumerate", "--n", "6"}).out).points();
    const auto canon = cloud_from_csv(cli({"enumerate", "--n", "6", "--canonical"}).out).points();
    CHECK(multiset_match(plain, canon, 1e-6));
    const auto dedup = cloud_from_csv(cli({"enumerate", "--n", "6", "--dedup"}).out);
    CHECK(dedup.size() < plain.size());
}

TEST_CASE("embed") {
    auto r = cli({"embed", "--k", "+", "--n", "4"});
    CHECK(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["l"] == "++");
    CHECK(doc["verified"] == true);
    CHECK(doc["targets"].size() == 2);

    doc = Json::parse(cli({"embed", "--k", "+", "--n", "3"}).out);
    CHECK(doc["l"] == "+");
    CHECK(doc["targets"][0]["re"].get<double>() == doctest::Approx(-1.0));

    r = cli({"embed", "--k", "+-", "--n", "4", "--witness"});
    CHECK(r.code == 0);
    doc = Json::parse(r.out);
    CHECK(doc["m"] == 4);
    CHECK(doc["parity_doubled"] == true);
    CHECK(doc["witnesses"].size() == doc["targets"].size());

    CHECK(cli({"embed", "--k", "+", "--n", "2"}).code == kExitUsage);
    // A tolerance below the achievable residual turns into a verification failure.
    r = cli({"embed", "--k", "++-", "--n", "5", "--tol", "1e-300"});
    CHECK(r.code == kExitVerificationFailed);
    CHECK(r.err.find("NOT verified") != std::string::npos);
}

TEST_CASE("density") {
    auto r = cli({"density", "--max-n", "4", "--max-m", "1", "--samples", "17"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["periodic_distance"].size() == 3);
    CHECK(doc["monotone"] == true);
    CHECK(doc.find("timing") == doc.end());
    CHECK(cli({"density", "--max-n", "2", "--max-m", "1", "--samples", "9"}).code == 0);
    CHECK(cli({"density", "--max-n", "40"}).code == kExitUsage);
    CHECK(cli({"density", "--max-m", "12"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    CHECK(cli({"spectrum", "--k", "+", "--out", "/nonexistent-dir/x.csv"}).code == kExitIo);
    CHECK(cli({"--tol", "1e-300", "spectrum", "--k", "+-+--+-++-+--++-"}).code == kExitNumerical);
}

TEST_CASE("files, manifests and determinism") {
    const fs::path dir = scratch();
    const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
    REQUIRE(cli({"--threads", "1", "enumerate", "--n", "7", "--out", a}).code == 0);
    REQUIRE(cli({"--threads", "3", "enumerate", "--n", "7", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    const Json manifest = Json::parse(slurp(a + ".manifest.json"));
    CHECK(manifest["command"] == "enumerate");
    CHECK(manifest["version"] == kVersion);
    REQUIRE(manifest["outputs"].size() == 1);
    CHECK(manifest["outputs"][0]["path"] == a);
    CHECK(manifest["outputs"][0]["sha256"] == sha256_hex(slurp(a)));
    CHECK(manifest["outputs"][0]["bytes"] == slurp(a).size());
    CHECK(manifest["params"]["n"] == 7);

    const std::string ja = (dir / "a.json").string(), jb = (dir / "b.json").string();
    REQUIRE(cli({"density", "--max-n", "5", "--max-m", "2", "--samples", "17", "--out", ja}).code == 0);
    REQUIRE(cli({"density", "--max-n", "5", "--max-m", "2", "--samples", "17", "--out", jb}).code == 0);
    CHECK(slurp(ja) == slurp(jb));

    const std::string sa = (dir / "s.svg").string();
    REQUIRE(cli({"spectrum", "--k", "+-+", "--out", sa}).code == 0);
    CHECK(slurp(sa).rfind("<svg", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("csv round trip is exact") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    SpectrumCloud c;
    for (int i = 0; i < 500; ++i) c.add({u(rng), u(rng) * 1e-12}, i % 3 ? "fin:n=4" : "per:m=2:phi=0.5");
    c.add({-0.0, 5e-324}, "edge");
    c.add({1e300, -1e-300}, "edge");
    const SpectrumCloud back = cloud_from_csv(cloud_to_csv(c));
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.point(i) == c.point(i));
        CHECK(back.tag(i) == c.tag(i));
    }
    CHECK(cloud_to_csv(back) == cloud_to_csv(c));
    CHECK(cloud_to_csv(c).find('\r') == std::string::npos);
}

TEST_CASE("csv parse errors name the line") {
    CHECK_THROWS_AS(cloud_from_csv(""), ParseError);
    CHECK_THROWS_AS(cloud_from_csv("x,y,z\n"), ParseError);
    try {
        cloud_from_csv("re,im,tag\n1,2,a\n3,oops,b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(cloud_from_csv("re,im,tag\n1,2\n"), ParseError);
}

TEST_CASE("grid_snap_dedup") {
    SpectrumCloud c;
    c.add({1.0, 0.0}, "a");
    c.add({1.0 + 1e-9, 0.0}, "a");
    c.add({1.0, 0.0}, "b");
    c.add({1.1, 0.0}, "a");
    const auto d = grid_snap_dedup(c);
    CHECK(d.size() == 3);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
